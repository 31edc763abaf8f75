#include "octant/walks.hpp"

#include <sstream>

namespace octant {

const mpz_class& WalkCountTable::at(int n, int i, int j, int k) const {
  int N = horizon;
  return counts[static_cast<size_t>(((n * (N + 1) + i) * (N + 1) + j)) * (N + 1) + k];
}

std::vector<mpz_class> WalkCountTable::totals() const {
  std::vector<mpz_class> out(horizon + 1);
  int N = horizon;
  for (int n = 0; n <= N; ++n) {
    mpz_class t = 0;
    for (int i = 0; i <= N; ++i)
      for (int j = 0; j <= N; ++j)
        for (int k = 0; k <= N; ++k) t += at(n, i, j, k);
    out[n] = t;
  }
  return out;
}

WalkCountTable count_walks(const StepSet& s, int N) {
  if (N < 0) throw std::invalid_argument("negative horizon");
  WalkCountTable table;
  table.horizon = N;
  size_t side = static_cast<size_t>(N + 1);
  table.counts.assign(side * side * side * side, mpz_class(0));
  auto idx = [&](int n, int i, int j, int k) {
    return ((static_cast<size_t>(n) * side + i) * side + j) * side + k;
  };
  table.counts[idx(0, 0, 0, 0)] = 1;
  auto steps = s.steps();
  for (int n = 1; n <= N; ++n)
    for (int i = 0; i <= N; ++i)
      for (int j = 0; j <= N; ++j)
        for (int k = 0; k <= N; ++k) {
          mpz_class acc = 0;
          for (const Step& st : steps) {
            int pi = i - st.dx, pj = j - st.dy, pk = k - st.dz;
            if (pi < 0 || pj < 0 || pk < 0 || pi > N || pj > N || pk > N) continue;
            acc += table.counts[idx(n - 1, pi, pj, pk)];
          }
          if (acc != 0) table.counts[idx(n, i, j, k)] = std::move(acc);
        }
  return table;
}

std::vector<mpz_class> count_walk_totals(const StepSet& s, int N) {
  if (N < 0) throw std::invalid_argument("negative horizon");
  if (N > 200) throw std::invalid_argument("totals mode capped at N = 200");
  size_t side = static_cast<size_t>(N + 1);
  std::vector<mpz_class> cur(side * side * side), next(side * side * side);
  auto idx = [&](int i, int j, int k) { return (static_cast<size_t>(i) * side + j) * side + k; };
  cur[idx(0, 0, 0)] = 1;
  auto steps = s.steps();
  std::vector<mpz_class> totals(N + 1);
  totals[0] = 1;
  for (int n = 1; n <= N; ++n) {
    int bound = std::min(n, N);
    for (int i = 0; i <= bound; ++i)
      for (int j = 0; j <= bound; ++j)
        for (int k = 0; k <= bound; ++k) {
          mpz_class& out = next[idx(i, j, k)];
          out = 0;
          for (const Step& st : steps) {
            int pi = i - st.dx, pj = j - st.dy, pk = k - st.dz;
            if (pi < 0 || pj < 0 || pk < 0 || pi > bound || pj > bound || pk > bound) continue;
            const mpz_class& v = cur[idx(pi, pj, pk)];
            if (v != 0) out += v;
          }
        }
    std::swap(cur, next);
    mpz_class t = 0;
    for (int i = 0; i <= bound; ++i)
      for (int j = 0; j <= bound; ++j)
        for (int k = 0; k <= bound; ++k) t += cur[idx(i, j, k)];
    totals[n] = t;
  }
  return totals;
}

namespace {

void dfs_paths(const std::vector<Step>& steps, int x, int y, int z, int depth, int N,
               std::vector<mpz_class>& cnt) {
  cnt[depth] += 1;
  if (depth == N) return;
  for (const Step& st : steps) {
    int nx = x + st.dx, ny = y + st.dy, nz = z + st.dz;
    if (nx < 0 || ny < 0 || nz < 0) continue;
    dfs_paths(steps, nx, ny, nz, depth + 1, N, cnt);
  }
}

}  // namespace

std::vector<mpz_class> brute_force_totals(const StepSet& s, int N) {
  std::vector<mpz_class> cnt(N + 1);
  dfs_paths(s.steps(), 0, 0, 0, 0, N, cnt);
  return cnt;
}

namespace {

// exact nullspace vector of the (rows x cols) system, or empty
std::vector<mpq_class> rational_kernel(std::vector<std::vector<mpq_class>>& m, size_t cols) {
  size_t rows = m.size();
  std::vector<int> pivot_of_col(cols, -1);
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t sel = rank;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[rank]);
    mpq_class inv = 1 / m[rank][col];
    for (size_t c = col; c < cols; ++c) m[rank][c] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      mpq_class f = m[r][col];
      for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    pivot_of_col[col] = static_cast<int>(rank);
    ++rank;
  }
  int free_col = -1;
  for (size_t col = 0; col < cols; ++col)
    if (pivot_of_col[col] < 0) {
      free_col = static_cast<int>(col);
      break;
    }
  if (free_col < 0) return {};
  std::vector<mpq_class> v(cols, 0);
  v[free_col] = 1;
  for (size_t col = 0; col < cols; ++col) {
    int pr = pivot_of_col[col];
    if (pr >= 0) v[col] = -m[pr][free_col];
  }
  return v;
}

bool modular_kernel_trivial(const std::vector<mpq_class>& seq, int r, int d) {
  const uint64_t p = kFingerprintPrimes[0];
  size_t cols = static_cast<size_t>(r + 1) * (d + 1);
  size_t rows = seq.size() - r;
  std::vector<uint64_t> sm(seq.size());
  for (size_t i = 0; i < seq.size(); ++i) {
    mpz_class num = seq[i].get_num() % mpz_class(p);
    mpz_class den = seq[i].get_den() % mpz_class(p);
    if (den == 0) return false;  // cannot prescreen; fall through to exact
    uint64_t n = mpz_class(num < 0 ? num + p : num).get_ui();
    uint64_t dd = den.get_ui();
    sm[i] = mul_mod(n, inv_mod(dd, p), p);
  }
  std::vector<std::vector<uint64_t>> m(rows, std::vector<uint64_t>(cols));
  for (size_t n = 0; n < rows; ++n)
    for (int i = 0; i <= r; ++i) {
      uint64_t npow = 1;
      for (int j = 0; j <= d; ++j) {
        m[n][static_cast<size_t>(i) * (d + 1) + j] = mul_mod(sm[n + i], npow, p);
        npow = mul_mod(npow, n % p, p);
      }
    }
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t sel = rank;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) return false;  // free column: kernel may be nontrivial
    std::swap(m[sel], m[rank]);
    uint64_t inv = inv_mod(m[rank][col], p);
    for (size_t c = col; c < cols; ++c) m[rank][c] = mul_mod(m[rank][c], inv, p);
    for (size_t rr = 0; rr < rows; ++rr) {
      if (rr == rank || m[rr][col] == 0) continue;
      uint64_t f = m[rr][col];
      for (size_t c = col; c < cols; ++c)
        m[rr][c] = sub_mod(m[rr][c], mul_mod(f, m[rank][c], p), p);
    }
    ++rank;
  }
  return rank == cols;
}

}  // namespace

namespace {

std::optional<Recurrence> guess_at(const std::vector<mpq_class>& seq, int r, int d) {
  // rank over a word-size prime bounds the rational kernel from above
  if (modular_kernel_trivial(seq, r, d)) return std::nullopt;
  size_t cols = static_cast<size_t>(r + 1) * (d + 1);
  size_t rows = seq.size() - r;
  std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols));
  for (size_t n = 0; n < rows; ++n)
    for (int i = 0; i <= r; ++i) {
      mpq_class npow = 1;
      for (int j = 0; j <= d; ++j) {
        m[n][static_cast<size_t>(i) * (d + 1) + j] = seq[n + i] * npow;
        npow *= static_cast<long>(n);
      }
    }
  std::vector<mpq_class> v = rational_kernel(m, cols);
  if (v.empty()) return std::nullopt;
  int order = -1;
  for (int i = r; i >= 0 && order < 0; --i)
    for (int j = 0; j <= d; ++j)
      if (v[static_cast<size_t>(i) * (d + 1) + j] != 0) {
        order = i;
        break;
      }
  if (order <= 0) return std::nullopt;  // degenerate: no genuine recurrence
  int degree = 0;
  for (int i = 0; i <= order; ++i)
    for (int j = 0; j <= d; ++j)
      if (v[static_cast<size_t>(i) * (d + 1) + j] != 0) degree = std::max(degree, j);
  Recurrence rec;
  rec.order = order;
  rec.degree = degree;
  rec.coeffs.assign(order + 1, std::vector<mpq_class>(degree + 1, 0));
  for (int i = 0; i <= order; ++i)
    for (int j = 0; j <= degree; ++j) rec.coeffs[i][j] = v[static_cast<size_t>(i) * (d + 1) + j];
  if (!verify_recurrence(seq, rec)) return std::nullopt;
  return rec;
}

}  // namespace

std::optional<Recurrence> guess_recurrence(const std::vector<mpq_class>& seq, int maxOrder,
                                           int maxDegree, int safetyMargin) {
  size_t needed =
      static_cast<size_t>((maxOrder + 1) * (maxDegree + 1) + maxOrder + safetyMargin);
  if (seq.size() < needed) throw InsufficientTerms();
  // smallest search spaces first so the reported relation is minimal
  for (int total = 1; total <= maxOrder + maxDegree; ++total)
    for (int r = 1; r <= maxOrder && r <= total; ++r) {
      int d = total - r;
      if (d > maxDegree) continue;
      if (auto rec = guess_at(seq, r, d)) return rec;
    }
  return std::nullopt;
}

bool verify_recurrence(const std::vector<mpq_class>& seq, const Recurrence& rec) {
  if (rec.coeffs.empty()) return false;
  bool leading_nonzero = false;
  for (const auto& c : rec.coeffs.back())
    if (c != 0) leading_nonzero = true;
  if (!leading_nonzero) return false;
  for (size_t n = 0; n + rec.order < seq.size(); ++n) {
    mpq_class acc = 0;
    for (int i = 0; i <= rec.order; ++i) {
      mpq_class pn = 0, npow = 1;
      for (size_t j = 0; j < rec.coeffs[i].size(); ++j) {
        pn += rec.coeffs[i][j] * npow;
        npow *= static_cast<long>(n);
      }
      acc += pn * seq[n + i];
    }
    if (acc != 0) return false;
  }
  return true;
}

std::string Recurrence::str() const {
  std::ostringstream os;
  for (int i = order; i >= 0; --i) {
    std::ostringstream poly;
    bool any = false;
    for (int j = static_cast<int>(coeffs[i].size()) - 1; j >= 0; --j) {
      if (coeffs[i][j] == 0) continue;
      if (any) poly << " + ";
      poly << coeffs[i][j].get_str();
      if (j >= 1) poly << "*n";
      if (j >= 2) poly << "^" << j;
      any = true;
    }
    if (!any) continue;
    if (os.tellp() > 0) os << " + ";
    os << "(" << poly.str() << ")*c(n+" << i << ")";
  }
  os << " = 0";
  return os.str();
}

std::string Recurrence::to_json() const {
  std::ostringstream os;
  os << "{\"order\":" << order << ",\"degree\":" << degree << ",\"coeffs\":[";
  for (int i = 0; i <= order; ++i) {
    os << (i ? "," : "") << "[";
    for (size_t j = 0; j < coeffs[i].size(); ++j)
      os << (j ? "," : "") << "\"" << coeffs[i][j].get_str() << "\"";
    os << "]";
  }
  os << "]}";
  return os.str();
}

}  // namespace octant
