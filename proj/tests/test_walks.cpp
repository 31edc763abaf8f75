#include <doctest.h>

#include "helpers.hpp"
#include "octant/walks.hpp"

using namespace octant;

namespace {

std::vector<mpq_class> to_rat(const std::vector<mpz_class>& v) {
  return std::vector<mpq_class>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("octant walk totals of the two study models") {
  std::vector<long> s2 = {1, 1, 3, 8, 26, 83, 286, 981, 3493, 12469, 45525, 166624, 618123};
  std::vector<long> s1 = {1,    2,    6,     18,    68,     224,   866,
                          3044, 11856, 42830, 168438, 619340, 2452088};
  auto got2 = count_walk_totals(helpers::model_s2(), 12);
  auto got1 = count_walk_totals(helpers::model_s1(), 12);
  REQUIRE(got2.size() == 13);
  REQUIRE(got1.size() == 13);
  for (int n = 0; n <= 12; ++n) {
    CHECK(got2[n] == s2[n]);
    CHECK(got1[n] == s1[n]);
  }
}

TEST_CASE("full table agrees with the rolling totals") {
  for (const StepSet& s : {helpers::model_s2(), helpers::model_cone_example()}) {
    WalkCountTable t = count_walks(s, 10);
    auto roll = count_walk_totals(s, 10);
    auto tab = t.totals();
    REQUIRE(tab.size() == roll.size());
    for (size_t i = 0; i < tab.size(); ++i) CHECK(tab[i] == roll[i]);
    // endpoint counts are consistent: a one-step walk ends on a usable step
    CHECK(t.at(0, 0, 0, 0) == 1);
    CHECK(t.at(1, 1, 0, 1) == 1);  // the step (1,0,1) of either model
  }
}

TEST_CASE("dp agrees with explicit path enumeration") {
  for (const StepSet& s : {helpers::model_s1(), helpers::model_s2(),
                           helpers::model_cone_example()}) {
    auto brute = brute_force_totals(s, 6);
    auto dp = count_walk_totals(s, 6);
    REQUIRE(brute.size() == dp.size());
    for (size_t i = 0; i < brute.size(); ++i) CHECK(brute[i] == dp[i]);
  }
}

TEST_CASE("guesser recovers simple closed forms") {
  // geometric: c(n+1) = 2 c(n) from 20 terms
  std::vector<mpq_class> geo;
  mpq_class v = 1;
  for (int i = 0; i < 20; ++i, v *= 2) geo.push_back(v);
  auto rec = guess_recurrence(geo, 2, 1);
  REQUIRE(rec.has_value());
  CHECK(rec->order == 1);
  CHECK(rec->degree == 0);
  CHECK(verify_recurrence(geo, *rec));

  // Catalan: (n+2) c(n+1) - (4n+2) c(n) = 0 from 30 terms
  std::vector<mpq_class> cat = {1};
  for (int n = 0; n < 29; ++n) cat.push_back(cat.back() * (4 * n + 2) / (n + 2));
  auto crec = guess_recurrence(cat, 2, 1);
  REQUIRE(crec.has_value());
  CHECK(crec->order == 1);
  CHECK(crec->degree == 1);
  CHECK(verify_recurrence(cat, *crec));
  // normalize sign: p1 = n + 2 up to a common rational factor
  mpq_class scale = crec->coeffs[1][1];
  CHECK(crec->coeffs[1][0] == 2 * scale);
  CHECK(crec->coeffs[0][1] == -4 * scale);
  CHECK(crec->coeffs[0][0] == -2 * scale);
}

TEST_CASE("guesser reports insufficient data honestly") {
  std::vector<mpq_class> two = {1, 2, 4, 8};
  CHECK_THROWS_AS(guess_recurrence(two, 3, 3), InsufficientTerms);
}

TEST_CASE("guesser finds nothing for a random-looking sequence") {
  // digits of a fixed irrational-looking stream satisfy no small P-recurrence
  std::vector<mpq_class> seq;
  uint64_t state = 88172645463325252ULL;
  for (int i = 0; i < 80; ++i) {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    seq.push_back(mpq_class(static_cast<unsigned long>(state % 1000)));
  }
  CHECK_FALSE(guess_recurrence(seq, 3, 3).has_value());
}

TEST_CASE("verify_recurrence rejects wrong relations") {
  std::vector<mpq_class> geo = {1, 2, 4, 8, 16, 32};
  Recurrence wrong{1, 0, {{mpq_class(-3)}, {mpq_class(1)}}};
  CHECK_FALSE(verify_recurrence(geo, wrong));
  Recurrence right{1, 0, {{mpq_class(-2)}, {mpq_class(1)}}};
  CHECK(verify_recurrence(geo, right));
  // an all-zero leading polynomial is not a valid recurrence
  Recurrence degenerate{1, 0, {{mpq_class(0)}, {mpq_class(0)}}};
  CHECK_FALSE(verify_recurrence(geo, degenerate));
}

TEST_CASE("walk counts of the study models feed the guesser") {
  // the worked Hadamard model has small recurrences in its components; the
  // raw 3D totals of the free-product model resist small recurrences
  auto totals = to_rat(count_walk_totals(helpers::model_s1(), 40));
  CHECK_FALSE(guess_recurrence(totals, 2, 2).has_value());
}
