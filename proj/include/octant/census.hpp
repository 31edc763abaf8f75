#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "octant/hadamard.hpp"
#include "octant/presentations.hpp"
#include "octant/stepset.hpp"
#include "octant/tropical.hpp"

namespace octant {

struct CensusConfig {
  int shards = 1;
  int shard = 0;
  int order_cutoff = kDefaultOrderCutoff;
  int fingerprint_cutoff = 10;
  int match_depth = 12;
  uint64_t seed = kDefaultSeed;
  std::string out;
  bool resume = false;
  int max_steps = 0;  // 0 = no restriction
  bool deep_match = false;
  bool certificates = false;
};

struct ClassificationRecord {
  uint32_t mask = 0;
  std::string diagram;
  int steps = 0;
  bool has_group = false;
  bool exceeded = false;
  int order = 0;  // valid when !exceeded
  Signature fingerprint;
  std::string presentation;  // "G1".."G12", "Unknown", or "" when finite
  std::string assignment;
  int depth = 0;
  std::string hadamard;  // "(1,2)", "(2,1)" or "none"
  std::array<bool, 3> singular{};
  std::string certificate;  // JSON or "none"
  std::string diagnostic;   // non-empty when a consistency check failed

  std::string to_jsonl() const;
};

ClassificationRecord classify_model(const StepSet& s, const CensusConfig& config);

// full sharded run; returns the number of records written (including
// previously written ones when resuming)
long run_census(const CensusConfig& config);

struct CensusSummary {
  long records = 0;
  long with_group = 0;
  long exceeds_cutoff = 0;
  std::array<long, 13> presentation_counts{};  // [0] unused, [i] = Gi
  long unknown_presentation = 0;
  long hadamard_total = 0;
  long hadamard_finite = 0;
  long g4_singular = 0;
  std::map<int, long> finite_orders;
  long audit_failures = 0;  // G3 <-> Hadamard consistency violations

  std::string text() const;
  std::string csv() const;
};

CensusSummary summarize(const std::string& file);

}  // namespace octant
