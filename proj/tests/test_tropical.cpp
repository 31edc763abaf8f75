#include <doctest.h>

#include "helpers.hpp"
#include "octant/tropical.hpp"

using namespace octant;

namespace {

ValuationTriple vt(long u, long v, long w) { return {u, v, w}; }

// sample points strictly inside the cone w > v > -u > 0
const std::array<ValuationTriple, 5> kConePoints = {
    vt(-1, 2, 4), vt(-2, 3, 5), vt(-1, 5, 9), vt(-3, 4, 11), vt(-2, 7, 8)};

}  // namespace

TEST_CASE("tropical shadow of the three-step model") {
  StepSet s = helpers::model_cone_example();
  auto gens = tropical_generators(s);
  for (int i = 0; i < 3; ++i) CHECK(gens[i].axis == i);

  // on the worked cone the compositions act linearly:
  // (c then b) : (u, v, w) -> (u, -u - v + 2w, -u - 2v + 3w)
  Mat3 cb = {{{1, 0, 0}, {-1, -1, 2}, {-1, -2, 3}}};
  // (c then b then a) : (u, v, w) -> (v - 2w, -u - v + 2w, -u - 2v + 3w)
  Mat3 acb = {{{0, 1, -2}, {-1, -1, 2}, {-1, -2, 3}}};
  for (const ValuationTriple& t : kConePoints) {
    CHECK(tropical_apply("cb", s, t) == mat_apply(cb, t));
    CHECK(tropical_apply("acb", s, t) == mat_apply(acb, t));
  }
  CHECK(tropical_apply("cb", s, vt(-1, 2, 4)) == vt(-1, 7, 9));
}

TEST_CASE("tropical generators are involutions") {
  for (const StepSet& s : {helpers::model_s1(), helpers::model_s2(),
                           helpers::model_cone_example()}) {
    auto gens = tropical_generators(s);
    for (int axis = 0; axis < 3; ++axis) {
      for (const ValuationTriple& t : kConePoints) {
        CHECK(gens[axis].apply(gens[axis].apply(t)) == t);
      }
    }
  }
}

TEST_CASE("matrix helpers") {
  Mat3 id = mat_identity();
  Mat3 m = {{{1, 2, 3}, {0, 1, 4}, {5, 6, 0}}};
  CHECK(mat_mul(id, m) == m);
  CHECK(mat_mul(m, id) == m);
  CHECK(mat_apply(m, vt(1, 1, 1)) == vt(6, 5, 11));
}

TEST_CASE("escape certificates for the study models") {
  for (const StepSet& s : {helpers::model_s1(), helpers::model_s2(),
                           helpers::model_cone_example()}) {
    auto cert = escape_certificate(s);
    REQUIRE(cert.has_value());
    CHECK(cert->verify(s));
  }
  // the finite commuting model has no escaping orbit
  CHECK_FALSE(escape_certificate(helpers::model_product()).has_value());
}

TEST_CASE("certificate verification rejects tampering") {
  auto cert = escape_certificate(helpers::model_cone_example());
  REQUIRE(cert.has_value());
  EscapeCertificate bad = *cert;
  bad.functional = {0, 0, 0};
  CHECK_FALSE(bad.verify(helpers::model_cone_example()));
  bad = *cert;
  bad.tail_map[0][0] += 1;
  CHECK_FALSE(bad.verify(helpers::model_cone_example()));
}

TEST_CASE("cone parsing and membership") {
  Cone c = Cone::parse("w-v>0; v+u>0; -u>0");
  CHECK(c.ineqs.size() == 3);
  CHECK(c.contains(vt(-1, 2, 4)));
  CHECK_FALSE(c.contains(vt(1, 2, 4)));   // -u > 0 fails
  CHECK_FALSE(c.contains(vt(-1, 4, 2)));  // w - v > 0 fails
  CHECK(c.contains(c.witness));
  CHECK_THROWS(Cone::parse("nonsense"));
}

TEST_CASE("farkas positivity on a cone") {
  Cone c = Cone::parse("w-v>0; v+u>0; -u>0");
  CHECK(prove_on_cone(c, {0, -1, 1}, true));    // w - v is a generator
  CHECK(prove_on_cone(c, {0, 0, 1}, true));     // w = (w-v) + (v+u) + (-u)
  CHECK(prove_on_cone(c, {0, 1, 0}, true));     // v = (v+u) + (-u)
  CHECK(prove_on_cone(c, {-1, 0, 0}, true));    // -u
  CHECK_FALSE(prove_on_cone(c, {1, 0, 0}, true));   // u is negative on the cone
  CHECK_FALSE(prove_on_cone(c, {0, 1, -1}, true));  // v - w is negative
  CHECK(prove_on_cone(c, {0, 0, 0}, false));    // 0 >= 0 holds vacuously
}

TEST_CASE("cone invariance proof for the worked example") {
  StepSet s = helpers::model_cone_example();
  ConeVerifyResult res = cone_verify(s, Cone::parse("w-v>0; v+u>0; -u>0"));
  REQUIRE(res.ok());
  CHECK_FALSE(res.proof->facts.empty());

  // the positive octant is not invariant for this model
  ConeVerifyResult bad = cone_verify(s, Cone::parse("u>0; v>0; w>0"));
  CHECK_FALSE(bad.ok());

  // the template search rediscovers a working cone
  auto found = cone_search(s);
  REQUIRE(found.has_value());
  CHECK(cone_verify(s, found->cone).ok());
}
