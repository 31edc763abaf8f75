#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "octant/stepset.hpp"

namespace octant {

struct InsufficientTerms : std::runtime_error {
  InsufficientTerms() : std::runtime_error("not enough terms for the requested search space") {}
};

// full DP table a[n][i][j][k] for 0 <= i,j,k,n <= N (steps move by at most 1
// per coordinate, so n bounds every coordinate)
struct WalkCountTable {
  int horizon;
  std::vector<mpz_class> counts;  // indexed by ((n*(N+1)+i)*(N+1)+j)*(N+1)+k

  const mpz_class& at(int n, int i, int j, int k) const;
  std::vector<mpz_class> totals() const;
};

WalkCountTable count_walks(const StepSet& s, int N);

// totals-only rolling DP; memory guardrail at N = 200
std::vector<mpz_class> count_walk_totals(const StepSet& s, int N);

// independent oracle: explicit path enumeration
std::vector<mpz_class> brute_force_totals(const StepSet& s, int N);

struct Recurrence {
  int order;
  int degree;
  // coeffs[i][j]: coefficient of n^j in p_i, relation sum_i p_i(n) seq(n+i) = 0
  std::vector<std::vector<mpq_class>> coeffs;

  std::string str() const;
  std::string to_json() const;
};

std::optional<Recurrence> guess_recurrence(const std::vector<mpq_class>& seq, int maxOrder,
                                           int maxDegree, int safetyMargin = 10);

bool verify_recurrence(const std::vector<mpq_class>& seq, const Recurrence& rec);

}  // namespace octant
