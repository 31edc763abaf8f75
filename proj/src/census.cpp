#include "octant/census.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace octant {

namespace {

std::string json_bool(bool b) { return b ? "true" : "false"; }

// fingerprint-level commutation screen: some generator commutes with both others
bool commutation_screen(const ModelMaps& maps, uint64_t seed) {
  return with_resampling(1, seed, [&](const PointSet& ps) {
    for (int first = 0; first < 3; ++first) {
      int e = first == 0 ? 1 : 0;
      int f = first == 2 ? 1 : 2;
      int o1 = image_pair_order(maps, {first}, {e}, 2, ps);
      int o2 = image_pair_order(maps, {first}, {f}, 2, ps);
      if (o1 != 0 && o2 != 0) return true;
    }
    return false;
  });
}

}  // namespace

std::string ClassificationRecord::to_jsonl() const {
  std::ostringstream os;
  os << "{\"mask\":\"" << StepSet(mask).to_hex() << "\",\"diagram\":\"" << diagram
     << "\",\"steps\":" << steps << ",\"has_group\":" << json_bool(has_group) << ",\"verdict\":\""
     << (exceeded ? "ExceedsCutoff" : "FiniteOrder") << "\",\"order\":";
  if (exceeded)
    os << "null";
  else
    os << order;
  os << ",\"fingerprint\":{\"ab\":" << fingerprint.ord_ab << ",\"ac\":" << fingerprint.ord_ac
     << ",\"bc\":" << fingerprint.ord_bc << ",\"s9\":" << json_bool(fingerprint.s9)
     << ",\"s10\":" << json_bool(fingerprint.s10) << ",\"s11\":" << json_bool(fingerprint.s11)
     << "},\"presentation\":";
  if (presentation.empty())
    os << "null";
  else
    os << "\"" << presentation << "\"";
  os << ",\"assignment\":";
  if (assignment.empty())
    os << "null";
  else
    os << "\"" << assignment << "\"";
  os << ",\"depth\":" << depth << ",\"hadamard\":\"" << hadamard << "\",\"singular\":["
     << json_bool(singular[0]) << "," << json_bool(singular[1]) << "," << json_bool(singular[2])
     << "],\"certificate\":" << (certificate.empty() || certificate == "none" ? "\"none\""
                                                                              : certificate)
     << ",\"diagnostic\":\"" << diagnostic << "\"}";
  return os.str();
}

ClassificationRecord classify_model(const StepSet& s, const CensusConfig& cfg) {
  ClassificationRecord rec;
  rec.mask = s.bits();
  rec.diagram = s.encode_diagram();
  rec.steps = s.size();
  rec.has_group = s.has_group();
  rec.certificate = "none";
  if (!rec.has_group) return rec;

  ModelMaps maps(s);
  ClosureResult closure = group_closure(s, cfg.order_cutoff, cfg.seed, 1);
  rec.exceeded = closure.exceeded;
  rec.order = closure.order;

  FingerprintOrders fo = fingerprint_orders(s, cfg.fingerprint_cutoff, cfg.seed, 1);
  rec.fingerprint = {fo.ord_ab, fo.ord_ac, fo.ord_bc, fo.special_g9, fo.special_g10,
                     fo.special_g11};

  if (rec.exceeded) {
    MatchResult m;
    if (!closure.relations_seen) {
      m.id = "G1";
      m.depth = 2 * cfg.fingerprint_cutoff;
    } else if (cfg.deep_match) {
      m = match_presentation(s, cfg.match_depth, cfg.seed);
    } else {
      m = with_resampling(2, cfg.seed ^ 0x6d617463680aULL, [&](const PointSet& ps) {
        return match_from_signatures(maps, true, ps, cfg.fingerprint_cutoff);
      });
    }
    rec.presentation = m.id;
    if (m.assignment) rec.assignment = m.assignment->str();
    rec.depth = m.depth;
  }

  auto had = detect_hadamard(s);
  rec.hadamard = had ? (had->kind1 == 1 ? "(1,2)" : "(2,1)") : "none";
  bool screen = commutation_screen(maps, cfg.seed ^ 0x636f6d6dULL);
  if (screen != had.has_value()) {
    // these verdicts almost always coincide; settle a disagreement symbolically
    CommutationWitness cw = commutation_test(s, cfg.seed);
    if (cw.commutes != had.has_value()) rec.diagnostic = "hadamard-commutation mismatch";
  }

  rec.singular = s.singular_projections();

  if (cfg.certificates && rec.exceeded) {
    auto cert = escape_certificate(s);
    if (cert) rec.certificate = cert->to_json();
  }
  return rec;
}

namespace {

uint32_t last_mask_in_file(const std::string& path) {
  std::ifstream in(path, std::ios::ate | std::ios::binary);
  if (!in) return 0;
  std::streamoff size = in.tellg();
  std::streamoff chunk = std::min<std::streamoff>(size, 1 << 16);
  in.seekg(size - chunk);
  std::string tail(chunk, '\0');
  in.read(tail.data(), chunk);
  size_t last = tail.find_last_of('\n', tail.size() - 2);
  std::string line = tail.substr(last == std::string::npos ? 0 : last + 1);
  size_t pos = line.find("\"mask\":\"");
  if (pos == std::string::npos) return 0;
  std::string hex = line.substr(pos + 8, 7);
  try {
    return StepSet::from_hex(hex).bits();
  } catch (...) {
    return 0;
  }
}

}  // namespace

long run_census(const CensusConfig& cfg) {
  uint32_t resume_after = 0;
  long written = 0;
  if (cfg.resume) {
    resume_after = last_mask_in_file(cfg.out);
    std::ifstream in(cfg.out);
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) ++written;
  }
  std::ofstream out(cfg.out, cfg.resume ? std::ios::app : std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file: " + cfg.out);
  for (uint32_t mask = 1; mask < (1u << 26); ++mask) {
    if (cfg.shards > 1 && static_cast<int>(mask % static_cast<uint32_t>(cfg.shards)) != cfg.shard)
      continue;
    if (mask <= resume_after) continue;
    if (cfg.max_steps && __builtin_popcount(mask) > cfg.max_steps) continue;
    StepSet s(mask);
    if (!s.has_group()) continue;
    if (!s.is_canonical()) continue;
    if (s.dimension_reducible() || s.has_unusable_step()) continue;
    ClassificationRecord rec = classify_model(s, cfg);
    out << rec.to_jsonl() << '\n';
    if (++written % 100000 == 0) {
      out.flush();
      std::cerr << "census: " << written << " records, at mask " << mask << "\n";
    }
  }
  return written;
}

namespace {

bool line_has(const std::string& line, const std::string& needle) {
  return line.find(needle) != std::string::npos;
}

}  // namespace

CensusSummary summarize(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open census file: " + file);
  CensusSummary sum;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++sum.records;
    bool group = line_has(line, "\"has_group\":true");
    if (group) ++sum.with_group;
    bool exceeded = line_has(line, "\"verdict\":\"ExceedsCutoff\"");
    if (exceeded) ++sum.exceeds_cutoff;
    bool hadamard = !line_has(line, "\"hadamard\":\"none\"");
    if (hadamard) {
      ++sum.hadamard_total;
      if (!exceeded) ++sum.hadamard_finite;
    }
    if (!exceeded) {
      size_t pos = line.find("\"order\":");
      if (pos != std::string::npos) {
        int order = std::atoi(line.c_str() + pos + 8);
        ++sum.finite_orders[order];
      }
    }
    std::string pres;
    {
      size_t pos = line.find("\"presentation\":\"");
      if (pos != std::string::npos) {
        size_t start = pos + 16;
        size_t end = line.find('"', start);
        pres = line.substr(start, end - start);
      }
    }
    if (!pres.empty()) {
      if (pres == "Unknown") {
        ++sum.unknown_presentation;
      } else {
        int gi = std::atoi(pres.c_str() + 1);
        if (gi >= 1 && gi <= 12) ++sum.presentation_counts[gi];
        if (gi == 4 && line_has(line, "\"singular\":[") &&
            line.find("true", line.find("\"singular\":[")) != std::string::npos) {
          size_t sp = line.find("\"singular\":[");
          size_t ep = line.find(']', sp);
          if (line.find("true", sp) < ep) ++sum.g4_singular;
        }
      }
    }
    if (exceeded && ((pres == "G3") != hadamard)) ++sum.audit_failures;
  }
  return sum;
}

std::string CensusSummary::text() const {
  std::ostringstream os;
  os << "records:          " << records << "\n";
  os << "with group:       " << with_group << "\n";
  os << "exceeds cutoff:   " << exceeds_cutoff << "\n";
  for (int i = 1; i <= 12; ++i) os << "G" << i << ":              " << presentation_counts[i]
                                   << "\n";
  os << "Unknown:          " << unknown_presentation << "\n";
  os << "hadamard total:   " << hadamard_total << "\n";
  os << "hadamard finite:  " << hadamard_finite << "\n";
  os << "G4 singular:      " << g4_singular << "\n";
  os << "finite orders:    ";
  bool first = true;
  for (const auto& [ord, cnt] : finite_orders) {
    if (!first) os << ", ";
    os << ord << " x " << cnt;
    first = false;
  }
  os << "\n";
  os << "audit failures:   " << audit_failures << "\n";
  return os.str();
}

std::string CensusSummary::csv() const {
  std::ostringstream os;
  os << "key,value\n";
  os << "records," << records << "\n";
  os << "with_group," << with_group << "\n";
  os << "exceeds_cutoff," << exceeds_cutoff << "\n";
  for (int i = 1; i <= 12; ++i) os << "G" << i << "," << presentation_counts[i] << "\n";
  os << "unknown," << unknown_presentation << "\n";
  os << "hadamard_total," << hadamard_total << "\n";
  os << "hadamard_finite," << hadamard_finite << "\n";
  os << "g4_singular," << g4_singular << "\n";
  os << "audit_failures," << audit_failures << "\n";
  return os.str();
}

}  // namespace octant
