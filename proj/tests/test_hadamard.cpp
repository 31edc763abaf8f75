#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "octant/hadamard.hpp"

using namespace octant;

namespace {

Laurent mono(int ex, int ey, int ez) { return Laurent::monomial({ex, ey, ez}); }

}  // namespace

TEST_CASE("worked four-step model is (1,2)-Hadamard in x") {
  auto d = detect_hadamard(helpers::model_s2());
  REQUIRE(d.has_value());
  CHECK(d->kind1 == 1);
  CHECK(d->kind2 == 2);
  CHECK(d->axis == 0);
  CHECK(d->U == mono(-1, 0, 0));
  CHECK(d->V == mono(1, 0, 0));
  CHECK(d->T == mono(0, -1, 1) + mono(0, 0, 1) + mono(0, 1, -1));
  // the decomposition reassembles the model polynomial
  CHECK(d->U + d->V * d->T == helpers::model_s2().polynomial());
}

TEST_CASE("free-product model is not Hadamard") {
  CHECK_FALSE(detect_hadamard(helpers::model_s1()).has_value());
  CHECK_FALSE(detect_hadamard(helpers::model_cone_example()).has_value());
}

TEST_CASE("product model is (2,1)-Hadamard with empty pure part") {
  auto d = detect_hadamard(helpers::model_product());
  REQUIRE(d.has_value());
  CHECK(d->kind1 == 2);
  CHECK(d->kind2 == 1);
  CHECK(d->U.is_zero());
  CHECK(d->U + d->V * d->T == helpers::model_product().polynomial());
}

TEST_CASE("commutation test mirrors Hadamard detection") {
  CommutationWitness w2 = commutation_test(helpers::model_s2());
  CHECK(w2.commutes);
  CHECK(w2.perm[0] == 0);  // the x generator is the commuting one

  CHECK_FALSE(commutation_test(helpers::model_s1()).commutes);
  CHECK_FALSE(commutation_test(helpers::model_cone_example()).commutes);
  CHECK(commutation_test(helpers::model_product()).commutes);
}

TEST_CASE("equivalence on all group-having models with at most 3 steps") {
  for (uint32_t mask = 1; mask < (1u << 26); ++mask) {
    if (__builtin_popcount(mask) > 3) continue;
    StepSet s(mask);
    if (!s.has_group() || !s.is_canonical()) continue;
    bool had = detect_hadamard(s).has_value();
    bool com = commutation_test(s).commutes;
    CHECK(had == com);
  }
}

TEST_CASE("group structure of Hadamard models") {
  HadamardGroupStructure inf = hadamard_group_structure(helpers::model_s2());
  CHECK_FALSE(inf.dihedral_finite);
  CHECK(inf.dihedral_order == 0);

  HadamardGroupStructure fin = hadamard_group_structure(helpers::model_product());
  CHECK(fin.dihedral_finite);
  // |G| = 2 |D| and the full closure has 8 elements
  CHECK(fin.dihedral_order == 4);
  CHECK(fin.confirmed);

  CHECK_THROWS_AS(hadamard_group_structure(helpers::model_s1()), std::domain_error);
}
