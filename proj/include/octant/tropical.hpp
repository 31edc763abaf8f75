#pragma once

#include <optional>
#include <string>
#include <vector>

#include "octant/groups.hpp"
#include "octant/stepset.hpp"

namespace octant {

struct ValuationTriple {
  long u, v, w;
  long operator[](int i) const { return i == 0 ? u : i == 1 ? v : w; }
  long& operator[](int i) { return i == 0 ? u : i == 1 ? v : w; }
  bool operator==(const ValuationTriple&) const = default;
  long l1() const { return std::abs(u) + std::abs(v) + std::abs(w); }
};

// Min-plus shadow of one generator: t[axis] <- val(num) - val(den) - t[axis],
// where val of a support at the two passive valuations is the minimum dot
// product over its exponent vectors (generic-coefficient convention).
struct TropicalGenerator {
  int axis;
  std::vector<std::array<long, 2>> num_supp, den_supp;  // passive axes in increasing order

  ValuationTriple apply(const ValuationTriple& t) const;
  // index of the minimizing exponent vector; -1 on a tie
  static int argmin(const std::vector<std::array<long, 2>>& supp, long p, long q);
};

std::array<TropicalGenerator, 3> tropical_generators(const StepSet& s);

ValuationTriple tropical_apply(const Word& word, const StepSet& s, const ValuationTriple& t);

// 3x3 integer linear map (valuation maps here are homogeneous once the
// minimizing monomials are pinned down)
using Mat3 = std::array<std::array<long, 3>, 3>;

Mat3 mat_mul(const Mat3& a, const Mat3& b);
ValuationTriple mat_apply(const Mat3& m, const ValuationTriple& t);
Mat3 mat_identity();

struct EscapeCertificate {
  Word word;
  ValuationTriple start;
  Mat3 tail_map;               // linear map governing the orbit from step `stable_from`
  int stable_from;             // orbit index where the argmin pattern stabilizes
  std::array<long, 3> functional;  // integer functional strictly increasing along the orbit
  int horizon;

  bool verify(const StepSet& s) const;  // recompute the orbit and check every claim
  std::string to_json() const;
};

std::optional<EscapeCertificate> escape_certificate(const StepSet& s, int maxWordLen = 6,
                                                    int horizon = 64, int startRange = 32);

// Cone of valuation triples cut out by homogeneous linear inequalities
// lhs . (u,v,w) > 0 (strict) or >= 0.
struct ConeInequality {
  std::array<long, 3> lhs;
  bool strict = true;
};

struct Cone {
  std::vector<ConeInequality> ineqs;
  ValuationTriple witness{};  // a point satisfying every inequality

  bool contains(const ValuationTriple& t) const;
  static Cone parse(const std::string& text);  // "w-v>0; v+u>0; -u>0"
  std::string str() const;
};

// Exact positivity of a linear form on the cone via Farkas certificates
// (conic combinations of the defining inequalities, Caratheodory size <= 3).
bool prove_on_cone(const Cone& c, const std::array<long, 3>& f, bool strict);

struct ConeProof {
  Cone cone;
  std::array<int, 3> roles;  // roles[i] = model axis playing letter i of the normal form
  Mat3 mx, my, mz;           // linear maps of the generators on the cone
  std::vector<std::string> facts;  // verified inequalities, human-readable
  std::string to_json() const;
};

enum class ConeFailure { NonUniqueMinimizer, GrowthViolated, EmptyCone };

struct ConeVerifyResult {
  std::optional<ConeProof> proof;
  ConeFailure failure = ConeFailure::GrowthViolated;
  std::string reason;
  bool ok() const { return proof.has_value(); }
};

ConeVerifyResult cone_verify(const StepSet& s, const Cone& c);

// try the small templates (signed total orders ending in "> 0")
std::optional<ConeProof> cone_search(const StepSet& s);

}  // namespace octant
