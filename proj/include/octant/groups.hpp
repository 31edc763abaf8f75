#pragma once

#include <optional>
#include <string>
#include <vector>

#include "octant/rational_fn.hpp"
#include "octant/stepset.hpp"

namespace octant {

struct GroupUndefined : std::runtime_error {
  GroupUndefined() : std::runtime_error("group undefined: a one-sided axis part vanishes") {}
};

// Raised when exact composition grows past the term budget; callers fall
// back to modular screening and report the result as unconfirmed.
struct SymbolicBlowup : std::runtime_error {
  SymbolicBlowup() : std::runtime_error("symbolic composition exceeds the term budget") {}
};

inline constexpr size_t kSymbolicTermBudget = 300;

// Group elements as letter strings over {a,b,c}; letters are involutions, so
// free reduction just cancels equal adjacent letters.
using Word = std::string;
Word free_reduce(const Word& w);

// a birational map as the images of (x, y, z)
using BirationalMap = std::array<RationalFn, 3>;

// the generator for one axis: phi_axis = (.., (1/v)(M_-/M_+), ..)
BirationalMap generator_map(const StepSet& s, int axis);
std::array<BirationalMap, 3> generators(const StepSet& s);  // throws GroupUndefined

// exact symbolic composition of a word, letters 'a','b','c' -> axes 0,1,2
BirationalMap compose_word(const StepSet& s, const Word& w);
bool word_is_identity_symbolic(const StepSet& s, const Word& w);
bool words_equal_symbolic(const StepSet& s, const Word& w1, const Word& w2);

// Fast modular evaluation of the generators at fingerprint points.
class ModelMaps {
 public:
  explicit ModelMaps(const StepSet& s);  // throws GroupUndefined

  ModPoint apply(int axis, const ModPoint& pt, uint64_t p) const;  // throws DenominatorVanishes
  // right-to-left application of a sequence of generator axes
  ModPoint apply_axes(const std::vector<int>& axes, ModPoint pt, uint64_t p) const;
  ModPoint apply_word(const Word& w, ModPoint pt, uint64_t p) const;

 private:
  uint16_t supp_[3][2];
};

ModPoint apply_word(const Word& w, const StepSet& s, const ModPoint& pt, uint64_t p);

// Run fn over freshly sampled point sets until no denominator vanishes;
// rotates points first and then primes.
template <typename F>
auto with_resampling(int k, uint64_t seed, F&& fn) {
  for (int attempt = 0;; ++attempt) {
    int prime_index = attempt / 16;
    if (prime_index >= 6) throw DenominatorVanishes();
    PointSet ps = PointSet::sample(k, seed + static_cast<uint64_t>(attempt) * 0x517cc1b727220a95ULL,
                                   prime_index);
    try {
      return fn(ps);
    } catch (const DenominatorVanishes&) {
      continue;
    }
  }
}

inline constexpr int kDefaultOrderCutoff = 400;
inline constexpr uint64_t kDefaultSeed = 20260823ULL;

struct OrderResult {
  bool exceeded;   // true: order > cutoff
  int order;       // valid when !exceeded
  bool confirmed;  // symbolic confirmation succeeded (always true when within cap)
};

OrderResult element_order(const Word& w, const StepSet& s, int cutoff,
                          uint64_t seed = kDefaultSeed);

struct ClosureResult {
  bool exceeded;        // more than cutoff distinct elements
  int order;            // group order when !exceeded
  bool relations_seen;  // a nontrivial fingerprint collision occurred during BFS
  bool confirmed;       // all closing relations symbolically confirmed
};

ClosureResult group_closure(const StepSet& s, int cutoff = kDefaultOrderCutoff,
                            uint64_t seed = kDefaultSeed, int points = 2);

// all freely reduced words of length <= maxLen equal to the identity,
// fingerprint-screened then symbolically confirmed
std::vector<Word> harvest_relations(const StepSet& s, int maxLen, uint64_t seed = kDefaultSeed);

struct FingerprintOrders {
  // pairwise-product orders of the plain generators; 0 means > cutoff
  int ord_ab, ord_ac, ord_bc;
  // special relators of the rare presentation rows, detected under some
  // axis permutation
  bool special_g9, special_g10, special_g11;
};

FingerprintOrders fingerprint_orders(const StepSet& s, int cutoff = 10,
                                     uint64_t seed = kDefaultSeed, int points = 3);

// order of the composition of two generator-image words (each an axis
// sequence applied right-to-left); 0 means > cutoff
int image_pair_order(const ModelMaps& maps, const std::vector<int>& im1,
                     const std::vector<int>& im2, int cutoff, const PointSet& ps);

// does the word over letters with the given images act as the identity
// (fingerprint test at the supplied points)
bool image_word_is_identity(const ModelMaps& maps, const Word& w,
                            const std::array<std::vector<int>, 3>& images, const PointSet& ps);

}  // namespace octant
