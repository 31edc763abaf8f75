#include "octant/hadamard.hpp"

#include <set>

namespace octant {

namespace {

std::array<int, 2> other_axes(int axis) {
  return axis == 0 ? std::array<int, 2>{1, 2}
         : axis == 1 ? std::array<int, 2>{0, 2}
                     : std::array<int, 2>{0, 1};
}

// rectangle test on the mixed part: support must factor as
// {distinguished exponents} x {complementary exponent pairs}
std::optional<HadamardDecomposition> try_kind(const StepSet& s, int axis, bool kind12) {
  auto [o1, o2] = other_axes(axis);
  Laurent U;
  std::set<int> dist;                    // distinguished-axis exponents of the mixed part
  std::set<std::array<int, 2>> compl2;   // complementary exponents of the mixed part
  std::set<std::array<int, 3>> mixed;
  for (const Step& st : s.steps()) {
    Exponents e{st.dx, st.dy, st.dz};
    bool pure = kind12 ? (e[o1] == 0 && e[o2] == 0)  // (1,2): U collects pure-axis monomials
                       : (e[axis] == 0);             // (2,1): U collects axis-free monomials
    if (pure) {
      U.add_term(e, Rat(1));
    } else {
      dist.insert(e[axis]);
      compl2.insert({e[o1], e[o2]});
      mixed.insert({e[0], e[1], e[2]});
    }
  }
  if (mixed.empty()) return std::nullopt;  // V or T would be zero
  if (mixed.size() != dist.size() * compl2.size()) return std::nullopt;
  for (int d : dist)
    for (const auto& c : compl2) {
      Exponents e{};
      e[axis] = d;
      e[o1] = c[0];
      e[o2] = c[1];
      if (!mixed.count({e[0], e[1], e[2]})) return std::nullopt;
    }
  HadamardDecomposition out;
  out.kind1 = kind12 ? 1 : 2;
  out.kind2 = kind12 ? 2 : 1;
  out.axis = axis;
  out.U = U;
  for (int d : dist) {
    Exponents e{};
    e[axis] = d;
    (kind12 ? out.V : out.T).add_term(e, Rat(1));
  }
  for (const auto& c : compl2) {
    Exponents e{};
    e[o1] = c[0];
    e[o2] = c[1];
    (kind12 ? out.T : out.V).add_term(e, Rat(1));
  }
  return out;
}

}  // namespace

std::optional<HadamardDecomposition> detect_hadamard(const StepSet& s) {
  for (int axis = 0; axis < 3; ++axis) {
    if (auto d = try_kind(s, axis, false)) return d;  // (2,1) first: U may be empty
    if (auto d = try_kind(s, axis, true)) return d;
  }
  return std::nullopt;
}

CommutationWitness commutation_test(const StepSet& s, uint64_t seed) {
  ModelMaps maps(s);
  // fingerprint screen, then exact confirmation of the two commutators
  for (int first = 0; first < 3; ++first) {
    auto [e, f] = other_axes(first);
    bool screen = with_resampling(2, seed, [&](const PointSet& ps) {
      return image_pair_order(maps, {first}, {e}, 2, ps) == 2 &&
             image_pair_order(maps, {first}, {f}, 2, ps) == 2;
    });
    if (!screen) continue;
    Word w1{static_cast<char>('a' + first), static_cast<char>('a' + e)};
    Word w2{static_cast<char>('a' + first), static_cast<char>('a' + f)};
    try {
      if (word_is_identity_symbolic(s, w1 + w1) && word_is_identity_symbolic(s, w2 + w2))
        return {true, {first, e, f}};
    } catch (const SymbolicBlowup&) {
      // confirmation infeasible within budget; the modular screen stands
      return {true, {first, e, f}};
    }
  }
  return {false, {0, 1, 2}};
}

HadamardGroupStructure hadamard_group_structure(const StepSet& s, int cutoff, uint64_t seed) {
  CommutationWitness cw = commutation_test(s, seed);
  if (!cw.commutes) throw std::domain_error("model is not Hadamard (no commuting generator)");
  Word prod{static_cast<char>('a' + cw.perm[1]), static_cast<char>('a' + cw.perm[2])};
  OrderResult ord = element_order(prod, s, cutoff, seed);
  if (ord.exceeded) return {false, 0, true};
  return {true, 2 * ord.order, ord.confirmed};
}

}  // namespace octant
