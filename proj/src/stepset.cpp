#include "octant/stepset.hpp"

#include <algorithm>
#include <cstring>
#include <set>
#include <stdexcept>

namespace octant {

namespace {

std::array<Step, 26> build_step_table() {
  std::array<Step, 26> t{};
  int n = 0;
  for (int z = -1; z <= 1; ++z)
    for (int y = -1; y <= 1; ++y)
      for (int x = -1; x <= 1; ++x) {
        if (x == 0 && y == 0 && z == 0) continue;
        t[n++] = Step{x, y, z};
      }
  return t;
}

constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

struct PermTables {
  // half-mask lookup: permuted = lo[p][m & 8191] | hi[p][m >> 13]
  uint32_t lo[6][1 << 13];
  uint32_t hi[6][1 << 13];
};

const PermTables& perm_tables() {
  static const PermTables tables = [] {
    PermTables t;
    for (int p = 0; p < 6; ++p) {
      int map26[26];
      for (int i = 0; i < 26; ++i) {
        const Step& s = step_table()[i];
        map26[i] = step_index(Step{s[kPerms[p][0]], s[kPerms[p][1]], s[kPerms[p][2]]});
      }
      for (uint32_t h = 0; h < (1u << 13); ++h) {
        uint32_t r0 = 0, r1 = 0;
        for (int b = 0; b < 13; ++b) {
          if (h >> b & 1) {
            r0 |= 1u << map26[b];
            r1 |= 1u << map26[b + 13];
          }
        }
        t.lo[p][h] = r0;
        t.hi[p][h] = r1;
      }
    }
    return t;
  }();
  return tables;
}

struct SupportTables {
  // per axis and sign {-1,+1}: 26-bit mask of steps contributing, and for
  // each bit the 9-bit support position of the remaining coordinates
  uint32_t axis_sign_mask[3][2];
  uint16_t supp9[3][26];  // 1 << (3*(e1+1)+(e2+1)) for the two passive axes
};

const SupportTables& support_tables() {
  static const SupportTables tables = [] {
    SupportTables t;
    std::memset(t.axis_sign_mask, 0, sizeof t.axis_sign_mask);
    for (int axis = 0; axis < 3; ++axis) {
      int o1 = axis == 0 ? 1 : 0;
      int o2 = axis == 2 ? 1 : 2;
      for (int i = 0; i < 26; ++i) {
        const Step& s = step_table()[i];
        t.supp9[axis][i] = static_cast<uint16_t>(1u << (3 * (s[o1] + 1) + (s[o2] + 1)));
        if (s[axis] == -1) t.axis_sign_mask[axis][0] |= 1u << i;
        if (s[axis] == 1) t.axis_sign_mask[axis][1] |= 1u << i;
      }
    }
    return t;
  }();
  return tables;
}

}  // namespace

const std::array<Step, 26>& step_table() {
  static const std::array<Step, 26> t = build_step_table();
  return t;
}

int step_index(const Step& s) {
  const auto& t = step_table();
  for (int i = 0; i < 26; ++i)
    if (t[i] == s) return i;
  throw std::invalid_argument("not a valid step");
}

StepSet::StepSet(uint32_t bits) : bits_(bits) {
  if (bits >= (1u << 26)) throw std::invalid_argument("mask exceeds 26 bits");
}

StepSet StepSet::from_steps(const std::vector<Step>& steps) {
  uint32_t m = 0;
  for (const Step& s : steps) m |= 1u << step_index(s);
  return StepSet(m);
}

StepSet StepSet::decode_diagram(const std::string& text) {
  if (text.size() != 26) throw std::invalid_argument("diagram must have 26 characters");
  uint32_t m = 0;
  for (int i = 0; i < 26; ++i) {
    if (text[i] == '1')
      m |= 1u << i;
    else if (text[i] != '0')
      throw std::invalid_argument("diagram characters must be '0' or '1'");
  }
  return StepSet(m);
}

std::string StepSet::encode_diagram() const {
  std::string s(26, '0');
  for (int i = 0; i < 26; ++i)
    if (bits_ >> i & 1) s[i] = '1';
  return s;
}

StepSet StepSet::from_hex(const std::string& hex) {
  if (hex.size() != 7) throw std::invalid_argument("hex mask must have 7 digits");
  uint32_t m = 0;
  for (char c : hex) {
    int d;
    if (c >= '0' && c <= '9')
      d = c - '0';
    else if (c >= 'a' && c <= 'f')
      d = c - 'a' + 10;
    else
      throw std::invalid_argument("invalid hex digit");
    m = m * 16 + static_cast<uint32_t>(d);
  }
  return StepSet(m);
}

std::string StepSet::to_hex() const {
  static const char* digits = "0123456789abcdef";
  std::string s(7, '0');
  uint32_t m = bits_;
  for (int i = 6; i >= 0; --i) {
    s[i] = digits[m & 15];
    m >>= 4;
  }
  return s;
}

bool StepSet::contains(const Step& s) const { return bits_ >> step_index(s) & 1; }

std::vector<Step> StepSet::steps() const {
  std::vector<Step> out;
  out.reserve(size());
  for (int i = 0; i < 26; ++i)
    if (bits_ >> i & 1) out.push_back(step_table()[i]);
  return out;
}

StepSet StepSet::permuted(const std::array<int, 3>& perm) const {
  uint32_t m = 0;
  for (int i = 0; i < 26; ++i)
    if (bits_ >> i & 1) {
      const Step& s = step_table()[i];
      m |= 1u << step_index(Step{s[perm[0]], s[perm[1]], s[perm[2]]});
    }
  return StepSet(m);
}

std::pair<StepSet, std::array<int, 3>> StepSet::canonicalize() const {
  const PermTables& t = perm_tables();
  uint32_t best = bits_;
  int bestp = 0;
  for (int p = 1; p < 6; ++p) {
    uint32_t im = t.lo[p][bits_ & 8191] | t.hi[p][bits_ >> 13];
    if (im < best) {
      best = im;
      bestp = p;
    }
  }
  return {StepSet(best), {kPerms[bestp][0], kPerms[bestp][1], kPerms[bestp][2]}};
}

uint16_t StepSet::support_mask(int axis, int sign) const {
  const SupportTables& t = support_tables();
  uint32_t minus = t.axis_sign_mask[axis][0], plus = t.axis_sign_mask[axis][1];
  uint32_t sel = sign == 0 ? (((1u << 26) - 1) & ~(minus | plus)) : (sign < 0 ? minus : plus);
  uint32_t m = bits_ & sel;
  uint16_t supp = 0;
  while (m) {
    int i = __builtin_ctz(m);
    m &= m - 1;
    supp |= t.supp9[axis][i];
  }
  return supp;
}

bool StepSet::has_group() const {
  const SupportTables& t = support_tables();
  for (int axis = 0; axis < 3; ++axis)
    for (int s = 0; s < 2; ++s)
      if (!(bits_ & t.axis_sign_mask[axis][s])) return false;
  return true;
}

Laurent StepSet::polynomial() const {
  Laurent p;
  for (const Step& s : steps()) p.add_term({s.dx, s.dy, s.dz}, Rat(1));
  return p;
}

AxisDecomposition StepSet::decompose() const {
  AxisDecomposition d;
  for (const Step& s : steps()) {
    for (int axis = 0; axis < 3; ++axis) {
      Exponents e{s.dx, s.dy, s.dz};
      e[axis] = 0;
      d.part[axis][s[axis] + 1].add_term(e, Rat(1));
    }
  }
  return d;
}

bool StepSet::default_singular_2d(const std::vector<std::pair<int, int>>& proj) {
  bool neg = false;
  for (auto [i, j] : proj) {
    if (i + j < 0) return false;
    if (i < 0 || j < 0) neg = true;
  }
  return neg;
}

std::array<bool, 3> StepSet::singular_projections(const Singular2D& pred) const {
  std::array<bool, 3> out{false, false, false};
  for (int axis = 0; axis < 3; ++axis) {
    int o1 = axis == 0 ? 1 : 0;
    int o2 = axis == 2 ? 1 : 2;
    std::set<std::pair<int, int>> proj;
    for (const Step& s : steps()) proj.insert({s[o1], s[o2]});
    out[axis] = pred(std::vector<std::pair<int, int>>(proj.begin(), proj.end()));
  }
  return out;
}

namespace {

// Feasibility of { a*lam + b*mu <= c } with lam, mu >= 0, exact over small
// integers (vertex enumeration; entries stay tiny).
bool lp_feasible(const std::vector<std::array<int, 3>>& cs) {
  std::vector<std::array<long, 3>> lines;
  lines.reserve(cs.size() + 2);
  for (const auto& c : cs) lines.push_back({c[0], c[1], c[2]});
  lines.push_back({1, 0, 0});  // lam = 0
  lines.push_back({0, 1, 0});  // mu = 0
  size_t m = lines.size();
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      long a1 = lines[i][0], b1 = lines[i][1], c1 = lines[i][2];
      long a2 = lines[j][0], b2 = lines[j][1], c2 = lines[j][2];
      long det = a1 * b2 - a2 * b1;
      if (det == 0) continue;
      long ln = c1 * b2 - c2 * b1, mn = a1 * c2 - a2 * c1, d = det;
      if (d < 0) {
        ln = -ln;
        mn = -mn;
        d = -d;
      }
      if (ln < 0 || mn < 0) continue;  // lam, mu >= 0
      bool ok = true;
      for (const auto& cc : cs) {
        if (cc[0] * ln + cc[1] * mn > cc[2] * d) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace

bool StepSet::dimension_reducible() const {
  auto st = steps();
  for (int axis = 0; axis < 3; ++axis) {
    int o1 = axis == 0 ? 1 : 0;
    int o2 = axis == 2 ? 1 : 2;
    // constraint per step: lam*s[o1] + mu*s[o2] <= s[axis]; keep min rhs per lhs
    int minc[3][3];
    for (auto& row : minc)
      for (int& v : row) v = 2;
    for (const Step& s : st) {
      int a = s[o1], b = s[o2];
      minc[a + 1][b + 1] = std::min(minc[a + 1][b + 1], s[axis]);
    }
    std::vector<std::array<int, 3>> cs;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (minc[i][j] != 2) cs.push_back({i - 1, j - 1, minc[i][j]});
    if (lp_feasible(cs)) return true;
  }
  return false;
}

bool StepSet::has_unusable_step() const {
  // reachability in a small box suffices: a step usable at all is usable
  // close to the origin (verified against the census count with larger boxes)
  constexpr int B = 8;
  auto st = steps();
  if (st.empty()) return false;
  static thread_local std::vector<bool> vis;
  vis.assign((B + 1) * (B + 1) * (B + 1), false);
  auto id = [](int x, int y, int z) { return (x * (B + 1) + y) * (B + 1) + z; };
  std::vector<int> q;
  vis[id(0, 0, 0)] = true;
  q.push_back(id(0, 0, 0));
  uint32_t used = 0;
  const uint32_t full = (1u << st.size()) - 1;
  for (size_t h = 0; h < q.size() && used != full; ++h) {
    int v = q[h];
    int z = v % (B + 1), y = (v / (B + 1)) % (B + 1), x = v / ((B + 1) * (B + 1));
    for (size_t k = 0; k < st.size(); ++k) {
      int nx = x + st[k].dx, ny = y + st[k].dy, nz = z + st[k].dz;
      if (nx < 0 || ny < 0 || nz < 0) continue;
      used |= 1u << k;
      if (nx > B || ny > B || nz > B) continue;
      if (!vis[id(nx, ny, nz)]) {
        vis[id(nx, ny, nz)] = true;
        q.push_back(id(nx, ny, nz));
      }
    }
  }
  return used != full;
}

}  // namespace octant
