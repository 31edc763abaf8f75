#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "helpers.hpp"
#include "octant/presentations.hpp"

using namespace octant;

TEST_CASE("presentation registry") {
  CHECK(table1().size() == 12);
  for (int i = 1; i <= 12; ++i) {
    const Presentation& p = presentation_by_id("G" + std::to_string(i));
    CHECK(p.id == "G" + std::to_string(i));
    // involution relators are always present
    std::set<Word> rels(p.relators.begin(), p.relators.end());
    CHECK(rels.count("aa"));
    CHECK(rels.count("bb"));
    CHECK(rels.count("cc"));
  }
  CHECK(presentation_by_id("G1").relators.size() == 3);
  CHECK_THROWS(presentation_by_id("G13"));
  CHECK(table1_json().find("\"G12\"") != std::string::npos);
}

TEST_CASE("bounded word problem") {
  const Presentation& g1 = presentation_by_id("G1");
  const Presentation& g3 = presentation_by_id("G3");
  const Presentation& g4 = presentation_by_id("G4");

  // in the free product nothing collapses
  CHECK_FALSE(word_equiv(g1, "ab", "ba"));
  CHECK(word_equiv(g1, "abba", ""));

  // (ab)^2 = (ac)^2 = 1 makes a central
  CHECK(word_equiv(g3, "ab", "ba"));
  CHECK(word_equiv(g3, "ac", "ca"));
  CHECK_FALSE(word_equiv(g3, "bc", "cb"));
  CHECK(word_equiv(g3, "abc", "bac"));

  // (ab)^3 = 1
  CHECK(word_equiv(g4, "ababab", ""));
  CHECK(word_equiv(g4, "ab", "baba"));
  CHECK_FALSE(word_equiv(g4, "ab", "ba"));
}

TEST_CASE("growth spheres distinguish the presentations") {
  CHECK(presentation_ball(presentation_by_id("G1"), 3) == std::vector<long>{1, 3, 6, 12});
  CHECK(presentation_ball(presentation_by_id("G3"), 3) == std::vector<long>{1, 3, 4, 4});
  CHECK(presentation_ball(presentation_by_id("G2"), 2) == std::vector<long>{1, 3, 5});
  // the two finite dihedral-flavored rows eventually stop growing
  auto g8 = presentation_ball(presentation_by_id("G8"), 4);
  CHECK(g8[0] == 1);
  CHECK(g8[1] == 3);
}

TEST_CASE("assignment space") {
  const auto& space = assignment_space();
  CHECK(space.size() == 42);
  std::set<std::string> seen;
  for (const auto& a : space) {
    seen.insert(a.str());
    auto im = a.images();
    for (int i = 0; i < 3; ++i) {
      CHECK((im[i].size() == 1 || im[i].size() == 3));
      if (im[i].size() == 3) {
        CHECK(im[i][0] == im[i][2]);  // conjugated image t g t
      }
    }
  }
  CHECK(seen.size() == 42);  // all distinct
  CHECK(space[0].str() == "a=x b=y c=z");
}

TEST_CASE("matching the three study models") {
  MatchResult s1 = match_presentation(helpers::model_s1());
  CHECK(s1.id == "G1");

  MatchResult s2 = match_presentation(helpers::model_s2());
  CHECK(s2.id == "G3");
  CHECK(s2.confirmed);
  REQUIRE(s2.assignment.has_value());

  MatchResult g4 = match_presentation(helpers::model_cone_example());
  CHECK(g4.id == "G4");
  CHECK(g4.confirmed);
}

TEST_CASE("matching one fixture from each rare row") {
  auto check_one = [](const char* diagram, const std::string& id) {
    StepSet s = StepSet::decode_diagram(diagram);
    MatchResult m = match_presentation(s);
    CHECK(m.id == id);
  };
  check_one(fixtures::kG8Models[0], "G8");
  check_one(fixtures::kG9Models[0], "G9");
  check_one(fixtures::kG10Models[0], "G10");
  check_one(fixtures::kG11Models[0], "G11");
  check_one(fixtures::kG12Models[0], "G12");
}

TEST_CASE("signature fast path agrees with full matching on the study models") {
  for (const StepSet& s : {helpers::model_s1(), helpers::model_s2(),
                           helpers::model_cone_example()}) {
    ModelMaps maps(s);
    ClosureResult c = group_closure(s, 400, kDefaultSeed, 1);
    REQUIRE(c.exceeded);
    MatchResult fast = with_resampling(2, kDefaultSeed, [&](const PointSet& ps) {
      return match_from_signatures(maps, c.relations_seen, ps);
    });
    MatchResult full = match_presentation(s);
    CHECK(fast.id == full.id);
  }
}

TEST_CASE("exactness argument for the worked Hadamard model") {
  StepSet s2 = helpers::model_s2();
  MatchResult m = match_presentation(s2);
  REQUIRE(m.id == "G3");
  auto cert = escape_certificate(s2);
  REQUIRE(cert.has_value());
  G3Exactness e = g3_exactness(s2, m, cert);
  CHECK(e.relations_confirmed);
  CHECK(e.central_separated);
  CHECK(e.certificate_ok);
  CHECK(e.exact());
}
