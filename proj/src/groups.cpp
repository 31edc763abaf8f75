#include "octant/groups.hpp"

#include <deque>
#include <unordered_map>

namespace octant {

Word free_reduce(const Word& w) {
  Word out;
  for (char c : w) {
    if (!out.empty() && out.back() == c)
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

BirationalMap generator_map(const StepSet& s, int axis) {
  if (!s.has_group()) throw GroupUndefined();
  AxisDecomposition d = s.decompose();
  BirationalMap m{RationalFn::variable(0), RationalFn::variable(1), RationalFn::variable(2)};
  RationalFn ratio(d.minus(axis), d.plus(axis));
  m[axis] = RationalFn(Laurent(Rat(1)), Laurent::variable(axis)) * ratio;
  return m;
}

std::array<BirationalMap, 3> generators(const StepSet& s) {
  return {generator_map(s, 0), generator_map(s, 1), generator_map(s, 2)};
}

namespace {

// Evaluate a Laurent polynomial at the components of a birational map. The
// substitution must be simultaneous: plugging the images in one variable at a
// time would also rewrite variables introduced by the earlier images.
RationalFn evaluate_at_map(const Laurent& f, const BirationalMap& at) {
  RationalFn acc;
  for (const auto& [e, c] : f.terms()) {
    RationalFn t{Laurent(c)};
    for (int v = 0; v < 3; ++v) {
      int k = e[v];
      if (k == 0) continue;
      RationalFn base = k > 0 ? at[v] : at[v].inverse();
      for (int i = 0; i < (k > 0 ? k : -k); ++i) t = t * base;
    }
    acc = acc + t;
  }
  return acc;
}

}  // namespace

BirationalMap compose_word(const StepSet& s, const Word& w) {
  if (!s.has_group()) throw GroupUndefined();
  AxisDecomposition d = s.decompose();
  BirationalMap cur{RationalFn::variable(0), RationalFn::variable(1), RationalFn::variable(2)};
  // apply letters right-to-left: new coordinate = (1/X_axis) * M_-(..)/M_+(..)
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    // check before applying: one letter application on oversized inputs is
    // already too expensive
    for (int v = 0; v < 3; ++v)
      if (cur[v].num().term_count() + cur[v].den().term_count() > kSymbolicTermBudget)
        throw SymbolicBlowup();
    int axis = *it - 'a';
    RationalFn num = evaluate_at_map(d.minus(axis), cur);
    RationalFn den = evaluate_at_map(d.plus(axis), cur);
    cur[axis] = cur[axis].inverse() * (num / den);
    for (int v = 0; v < 3; ++v)
      if (cur[v].num().term_count() + cur[v].den().term_count() > kSymbolicTermBudget)
        throw SymbolicBlowup();
  }
  return cur;
}

bool word_is_identity_symbolic(const StepSet& s, const Word& w) {
  BirationalMap m = compose_word(s, free_reduce(w));
  for (int i = 0; i < 3; ++i)
    if (!m[i].equals(RationalFn::variable(i))) return false;
  return true;
}

bool words_equal_symbolic(const StepSet& s, const Word& w1, const Word& w2) {
  BirationalMap m1 = compose_word(s, free_reduce(w1));
  BirationalMap m2 = compose_word(s, free_reduce(w2));
  for (int i = 0; i < 3; ++i)
    if (!m1[i].equals(m2[i])) return false;
  return true;
}

ModelMaps::ModelMaps(const StepSet& s) {
  if (!s.has_group()) throw GroupUndefined();
  for (int axis = 0; axis < 3; ++axis) {
    supp_[axis][0] = s.support_mask(axis, -1);
    supp_[axis][1] = s.support_mask(axis, +1);
  }
}

namespace {

// sum over a 9-bit support of v1^e1 * v2^e2, e1,e2 in {-1,0,1}
inline uint64_t eval_support(uint16_t supp, uint64_t v1, uint64_t v1i, uint64_t v2, uint64_t v2i,
                             uint64_t p) {
  uint64_t sum = 0;
  uint16_t m = supp;
  while (m) {
    int b = __builtin_ctz(m);
    m &= static_cast<uint16_t>(m - 1);
    int e1 = b / 3 - 1, e2 = b % 3 - 1;
    uint64_t t = e1 == 0 ? 1 : (e1 > 0 ? v1 : v1i);
    uint64_t u = e2 == 0 ? 1 : (e2 > 0 ? v2 : v2i);
    uint64_t prod = t == 1 ? u : (u == 1 ? t : mul_mod(t, u, p));
    sum = add_mod(sum, prod, p);
  }
  return sum;
}

}  // namespace

ModPoint ModelMaps::apply(int axis, const ModPoint& pt, uint64_t p) const {
  uint64_t v1, v1i, v2, v2i;
  switch (axis) {
    case 0:
      v1 = pt.y, v1i = pt.yi, v2 = pt.z, v2i = pt.zi;
      break;
    case 1:
      v1 = pt.x, v1i = pt.xi, v2 = pt.z, v2i = pt.zi;
      break;
    default:
      v1 = pt.x, v1i = pt.xi, v2 = pt.y, v2i = pt.yi;
      break;
  }
  uint64_t num = eval_support(supp_[axis][0], v1, v1i, v2, v2i, p);
  uint64_t den = eval_support(supp_[axis][1], v1, v1i, v2, v2i, p);
  if (num == 0 || den == 0) throw DenominatorVanishes();
  uint64_t invnd = inv_mod(mul_mod(num, den, p), p);
  ModPoint out = pt;
  uint64_t num2 = mul_mod(num, num, p), den2 = mul_mod(den, den, p);
  switch (axis) {
    case 0:
      out.x = mul_mod(pt.xi, mul_mod(num2, invnd, p), p);
      out.xi = mul_mod(pt.x, mul_mod(den2, invnd, p), p);
      break;
    case 1:
      out.y = mul_mod(pt.yi, mul_mod(num2, invnd, p), p);
      out.yi = mul_mod(pt.y, mul_mod(den2, invnd, p), p);
      break;
    default:
      out.z = mul_mod(pt.zi, mul_mod(num2, invnd, p), p);
      out.zi = mul_mod(pt.z, mul_mod(den2, invnd, p), p);
      break;
  }
  return out;
}

ModPoint ModelMaps::apply_axes(const std::vector<int>& axes, ModPoint pt, uint64_t p) const {
  for (auto it = axes.rbegin(); it != axes.rend(); ++it) pt = apply(*it, pt, p);
  return pt;
}

ModPoint ModelMaps::apply_word(const Word& w, ModPoint pt, uint64_t p) const {
  for (auto it = w.rbegin(); it != w.rend(); ++it) pt = apply(*it - 'a', pt, p);
  return pt;
}

ModPoint apply_word(const Word& w, const StepSet& s, const ModPoint& pt, uint64_t p) {
  return ModelMaps(s).apply_word(w, pt, p);
}

OrderResult element_order(const Word& w, const StepSet& s, int cutoff, uint64_t seed) {
  Word rw = free_reduce(w);
  if (rw.empty()) return {false, 1, true};
  ModelMaps maps(s);
  int n = with_resampling(3, seed, [&](const PointSet& ps) -> int {
    std::vector<ModPoint> cur = ps.pts;
    for (int k = 1; k <= cutoff; ++k) {
      bool all_id = true;
      for (size_t i = 0; i < cur.size(); ++i) {
        cur[i] = maps.apply_word(rw, cur[i], ps.prime);
        if (!(cur[i] == ps.pts[i])) all_id = false;
      }
      if (all_id) return k;
    }
    return 0;
  });
  if (n == 0) return {true, 0, false};
  // symbolic confirmation (cap: combined word length 24)
  if (static_cast<int>(rw.size()) * n <= 24) {
    Word wn;
    for (int i = 0; i < n; ++i) wn += rw;
    try {
      bool ok = word_is_identity_symbolic(s, wn);
      if (!ok) return {true, 0, false};  // collision unmasked; treat as unresolved beyond cutoff
      return {false, n, true};
    } catch (const SymbolicBlowup&) {
      // confirmation infeasible; fall through to the wider modular rescreen
    }
  }
  // too long to confirm symbolically: re-screen with extra points
  bool ok = with_resampling(8, seed ^ 0xabcdef12345ULL, [&](const PointSet& ps) -> bool {
    std::vector<ModPoint> cur = ps.pts;
    for (int k = 0; k < n; ++k)
      for (auto& pt : cur) pt = maps.apply_word(rw, pt, ps.prime);
    for (size_t i = 0; i < cur.size(); ++i)
      if (!(cur[i] == ps.pts[i])) return false;
    return true;
  });
  return ok ? OrderResult{false, n, false} : OrderResult{true, 0, false};
}

namespace {

struct FingerprintHash {
  size_t operator()(const std::vector<ModPoint>& v) const {
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    auto mix = [&](uint64_t x) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (const auto& pt : v) {
      mix(pt.x);
      mix(pt.y);
      mix(pt.z);
    }
    return static_cast<size_t>(h);
  }
};

struct FingerprintEq {
  bool operator()(const std::vector<ModPoint>& a, const std::vector<ModPoint>& b) const {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
      if (!(a[i] == b[i])) return false;
    return true;
  }
};

struct BfsOutcome {
  bool exceeded;
  int order;
  bool relations_seen;
  std::vector<std::pair<Word, Word>> merges;  // fingerprint-equal word pairs
};

BfsOutcome closure_bfs(const ModelMaps& maps, const PointSet& ps, int cutoff,
                       bool collect_merges) {
  using FP = std::vector<ModPoint>;
  std::unordered_map<FP, Word, FingerprintHash, FingerprintEq> seen;
  std::deque<std::pair<FP, Word>> queue;
  seen.emplace(ps.pts, Word{});
  queue.emplace_back(ps.pts, Word{});
  BfsOutcome out{false, 0, false, {}};
  while (!queue.empty()) {
    auto [fp, w] = std::move(queue.front());
    queue.pop_front();
    for (char g = 'a'; g <= 'c'; ++g) {
      if (!w.empty() && w.front() == g) continue;  // would cancel back to the parent
      FP nfp;
      nfp.reserve(fp.size());
      for (const auto& pt : fp) nfp.push_back(maps.apply(g - 'a', pt, ps.prime));
      Word nw = Word(1, g) + w;
      auto [it, inserted] = seen.emplace(nfp, nw);
      if (inserted) {
        if (static_cast<int>(seen.size()) > cutoff) {
          out.exceeded = true;
          return out;
        }
        queue.emplace_back(std::move(nfp), std::move(nw));
      } else {
        out.relations_seen = true;
        if (collect_merges) out.merges.emplace_back(nw, it->second);
      }
    }
  }
  out.order = static_cast<int>(seen.size());
  return out;
}

}  // namespace

ClosureResult group_closure(const StepSet& s, int cutoff, uint64_t seed, int points) {
  ModelMaps maps(s);
  BfsOutcome out = with_resampling(points, seed, [&](const PointSet& ps) {
    return closure_bfs(maps, ps, cutoff, false);
  });
  if (out.exceeded) return {true, 0, out.relations_seen, false};
  // candidate finite order: re-run with more points, then confirm merges
  BfsOutcome strong = with_resampling(points + 3, seed ^ 0x5bd1e995ULL, [&](const PointSet& ps) {
    return closure_bfs(maps, ps, cutoff, true);
  });
  if (strong.exceeded) return {true, 0, true, false};
  bool confirmed = true;
  for (auto& [w1, w2] : strong.merges) {
    if (w1.size() + w2.size() <= 24) {
      try {
        if (!words_equal_symbolic(s, w1, w2)) {
          // a modular collision produced a spurious merge; the order is unsound
          return {true, 0, strong.relations_seen, false};
        }
      } catch (const SymbolicBlowup&) {
        confirmed = false;
      }
    } else {
      confirmed = false;
    }
  }
  return {false, strong.order, strong.relations_seen, confirmed};
}

std::vector<Word> harvest_relations(const StepSet& s, int maxLen, uint64_t seed) {
  ModelMaps maps(s);
  std::vector<Word> candidates = with_resampling(3, seed, [&](const PointSet& ps) {
    std::vector<Word> out;
    // enumerate freely reduced words breadth-first, tracking fingerprints
    std::vector<std::pair<std::vector<ModPoint>, Word>> layer{{ps.pts, Word{}}};
    for (int len = 1; len <= maxLen; ++len) {
      std::vector<std::pair<std::vector<ModPoint>, Word>> next;
      for (auto& [fp, w] : layer) {
        for (char g = 'a'; g <= 'c'; ++g) {
          if (!w.empty() && w.front() == g) continue;
          std::vector<ModPoint> nfp;
          for (const auto& pt : fp) nfp.push_back(maps.apply(g - 'a', pt, ps.prime));
          Word nw = Word(1, g) + w;
          bool identity = true;
          for (size_t i = 0; i < nfp.size(); ++i)
            if (!(nfp[i] == ps.pts[i])) {
              identity = false;
              break;
            }
          if (identity) out.push_back(nw);
          next.emplace_back(std::move(nfp), std::move(nw));
        }
      }
      layer = std::move(next);
    }
    return out;
  });
  std::vector<Word> confirmed;
  for (const Word& w : candidates) {
    try {
      if (word_is_identity_symbolic(s, w)) confirmed.push_back(w);
    } catch (const SymbolicBlowup&) {
      // cannot be confirmed within budget; drop the candidate
    }
  }
  return confirmed;
}

int image_pair_order(const ModelMaps& maps, const std::vector<int>& im1,
                     const std::vector<int>& im2, int cutoff, const PointSet& ps) {
  std::vector<ModPoint> cur = ps.pts;
  for (int n = 1; n <= cutoff; ++n) {
    bool all_id = true;
    for (size_t i = 0; i < cur.size(); ++i) {
      cur[i] = maps.apply_axes(im2, cur[i], ps.prime);
      cur[i] = maps.apply_axes(im1, cur[i], ps.prime);
      if (!(cur[i] == ps.pts[i])) all_id = false;
    }
    if (all_id) return n;
  }
  return 0;
}

bool image_word_is_identity(const ModelMaps& maps, const Word& w,
                            const std::array<std::vector<int>, 3>& images, const PointSet& ps) {
  for (const auto& base : ps.pts) {
    ModPoint pt = base;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      pt = maps.apply_axes(images[*it - 'a'], pt, ps.prime);
    if (!(pt == base)) return false;
  }
  return true;
}

namespace {

const Word kSpecialG9 = "acbacbcabc";
const Word kSpecialG10 = "cbcacbca";  // (cbca)^2
const Word kSpecialG11 = "babcbabc";  // (babc)^2

}  // namespace

FingerprintOrders fingerprint_orders(const StepSet& s, int cutoff, uint64_t seed, int points) {
  ModelMaps maps(s);
  return with_resampling(points, seed, [&](const PointSet& ps) {
    FingerprintOrders fo{};
    fo.ord_ab = image_pair_order(maps, {0}, {1}, cutoff, ps);
    fo.ord_ac = image_pair_order(maps, {0}, {2}, cutoff, ps);
    fo.ord_bc = image_pair_order(maps, {1}, {2}, cutoff, ps);
    constexpr int kPerm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& p : kPerm) {
      std::array<std::vector<int>, 3> images{std::vector<int>{p[0]}, std::vector<int>{p[1]},
                                             std::vector<int>{p[2]}};
      if (!fo.special_g9 && image_word_is_identity(maps, kSpecialG9, images, ps))
        fo.special_g9 = true;
      if (!fo.special_g10 && image_word_is_identity(maps, kSpecialG10, images, ps))
        fo.special_g10 = true;
      if (!fo.special_g11 && image_word_is_identity(maps, kSpecialG11, images, ps))
        fo.special_g11 = true;
    }
    return fo;
  });
}

}  // namespace octant
