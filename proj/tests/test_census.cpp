#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <string>

#include "helpers.hpp"
#include "octant/census.hpp"

using namespace octant;

namespace {

std::set<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::set<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.insert(line);
  return lines;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/octant_test_" + name + ".jsonl") {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("classification records for the study models") {
  CensusConfig cfg;

  ClassificationRecord s2 = classify_model(helpers::model_s2(), cfg);
  CHECK(s2.has_group);
  CHECK(s2.exceeded);
  CHECK(s2.presentation == "G3");
  CHECK(s2.hadamard == "(1,2)");
  CHECK(s2.singular == std::array<bool, 3>{true, false, false});
  CHECK(s2.diagnostic.empty());

  ClassificationRecord s1 = classify_model(helpers::model_s1(), cfg);
  CHECK(s1.exceeded);
  CHECK(s1.presentation == "G1");
  CHECK(s1.hadamard == "none");

  ClassificationRecord g4 = classify_model(helpers::model_cone_example(), cfg);
  CHECK(g4.presentation == "G4");

  ClassificationRecord fin = classify_model(helpers::model_product(), cfg);
  CHECK_FALSE(fin.exceeded);
  CHECK(fin.order == 8);
  CHECK(fin.presentation.empty());  // presentation only for ExceedsCutoff
  CHECK(fin.hadamard == "(2,1)");
}

TEST_CASE("jsonl record shape") {
  CensusConfig cfg;
  std::string line = classify_model(helpers::model_s2(), cfg).to_jsonl();
  // fixed key order
  const char* keys[] = {"\"mask\"",     "\"diagram\"",      "\"steps\"",      "\"has_group\"",
                        "\"verdict\"",  "\"order\"",        "\"fingerprint\"", "\"presentation\"",
                        "\"assignment\"", "\"depth\"",      "\"hadamard\"",   "\"singular\"",
                        "\"certificate\"", "\"diagnostic\""};
  size_t pos = 0;
  for (const char* k : keys) {
    size_t next = line.find(k, pos);
    REQUIRE(next != std::string::npos);
    pos = next;
  }
  CHECK(line.find("\"verdict\":\"ExceedsCutoff\"") != std::string::npos);
  CHECK(line.find("\"order\":null") != std::string::npos);
  CHECK(line.find("\"presentation\":\"G3\"") != std::string::npos);
}

TEST_CASE("census restricted to 3 steps: structure, sharding, resume") {
  TempFile whole("whole"), a("a"), b("b");

  CensusConfig cfg;
  cfg.max_steps = 3;
  cfg.out = whole.path;
  long n = run_census(cfg);
  auto all = read_lines(whole.path);
  CHECK(n == static_cast<long>(all.size()));
  CHECK(n > 0);

  // every record is canonical with a group
  for (const std::string& line : all) {
    size_t p = line.find("\"mask\":\"");
    StepSet s = StepSet::from_hex(line.substr(p + 8, 7));
    CHECK(s.is_canonical());
    CHECK(s.has_group());
    CHECK(s.fully_three_dimensional());
    CHECK(line.find("\"has_group\":true") != std::string::npos);
  }

  // shard union equals the unsharded run
  CensusConfig ca = cfg, cb = cfg;
  ca.shards = cb.shards = 2;
  ca.shard = 0;
  cb.shard = 1;
  ca.out = a.path;
  cb.out = b.path;
  long na = run_census(ca), nb = run_census(cb);
  CHECK(na + nb == n);
  auto la = read_lines(a.path), lb = read_lines(b.path);
  std::set<std::string> merged = la;
  merged.insert(lb.begin(), lb.end());
  CHECK(merged == all);

  // replay is byte-identical
  TempFile replay("replay");
  CensusConfig cr = cfg;
  cr.out = replay.path;
  run_census(cr);
  CHECK(read_lines(replay.path) == all);

  // resume: truncate the file to its first half of lines and resume
  {
    std::vector<std::string> ordered;
    std::ifstream in(whole.path);
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) ordered.push_back(line);
    std::ofstream out(whole.path, std::ios::trunc);
    for (size_t i = 0; i < ordered.size() / 2; ++i) out << ordered[i] << "\n";
  }
  CensusConfig cres = cfg;
  cres.resume = true;
  long total = run_census(cres);
  CHECK(total == n);
  CHECK(read_lines(whole.path) == all);
}

TEST_CASE("summary aggregates the restricted census") {
  TempFile f("summary");
  CensusConfig cfg;
  cfg.max_steps = 3;
  cfg.out = f.path;
  long n = run_census(cfg);

  CensusSummary sum = summarize(f.path);
  CHECK(sum.records == n);
  CHECK(sum.with_group == n);
  CHECK(sum.audit_failures == 0);
  long histo = 0;
  for (int i = 1; i <= 12; ++i) histo += sum.presentation_counts[i];
  CHECK(histo + sum.unknown_presentation == sum.exceeds_cutoff);
  long finite = 0;
  for (const auto& [ord, cnt] : sum.finite_orders) {
    CHECK(ord >= 2);
    finite += cnt;
  }
  CHECK(finite == sum.records - sum.exceeds_cutoff);
  CHECK(sum.text().find("records:") != std::string::npos);
  CHECK(sum.csv().find("records,") != std::string::npos);
}
