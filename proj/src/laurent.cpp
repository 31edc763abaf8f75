#include "octant/laurent.hpp"

#include <sstream>

namespace octant {

Laurent Laurent::monomial(const Exponents& e, const Rat& c) {
  Laurent r;
  if (c != 0) r.terms_[e] = c;
  return r;
}

Laurent Laurent::variable(int axis, int power) {
  Exponents e{0, 0, 0};
  e[axis] = power;
  return monomial(e);
}

void Laurent::add_term(const Exponents& e, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_[e] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (auto& [ea, ca] : a.terms_) {
    for (auto& [eb, cb] : b.terms_) {
      Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Exponents Laurent::min_exponents() const {
  if (terms_.empty()) return {0, 0, 0};
  Exponents m{INT32_MAX, INT32_MAX, INT32_MAX};
  for (auto& [e, c] : terms_) {
    for (int i = 0; i < 3; ++i) m[i] = std::min(m[i], e[i]);
  }
  return m;
}

Laurent Laurent::shifted(const Exponents& s) const {
  Laurent r;
  for (auto& [e, c] : terms_) r.terms_[{e[0] + s[0], e[1] + s[1], e[2] + s[2]}] = c;
  return r;
}

Laurent Laurent::pow(unsigned n) const {
  Laurent r(Rat(1));
  Laurent base = *this;
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

Rat Laurent::evaluate(const std::array<Rat, 3>& v) const {
  Rat sum(0);
  for (auto& [e, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (v[i] == 0) throw DenominatorVanishes();
      Rat p = v[i];
      int n = e[i] > 0 ? e[i] : -e[i];
      Rat acc(1);
      for (int k = 0; k < n; ++k) acc *= p;
      if (e[i] < 0) acc = 1 / acc;
      t *= acc;
    }
    sum += t;
  }
  return sum;
}

uint64_t Laurent::evaluate_mod(const ModPoint& pt, uint64_t p) const {
  const uint64_t vals[3] = {pt.x, pt.y, pt.z};
  const uint64_t invs[3] = {pt.xi, pt.yi, pt.zi};
  uint64_t sum = 0;
  for (auto& [e, c] : terms_) {
    // coefficient mod p
    mpz_class num = c.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = c.get_den() % p;
    uint64_t cm = mpz_get_ui(num.get_mpz_t());
    uint64_t dm = mpz_get_ui(den.get_mpz_t());
    if (dm == 0) throw DenominatorVanishes();
    uint64_t t = cm;
    if (dm != 1) t = mul_mod(t, inv_mod(dm, p), p);
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      uint64_t base = e[i] > 0 ? vals[i] : invs[i];
      int n = e[i] > 0 ? e[i] : -e[i];
      t = mul_mod(t, pow_mod(base, n, p), p);
    }
    sum = add_mod(sum, t, p);
  }
  return sum;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms_) {
    Rat a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    } else if (a < 0) {
      os << "-";
      a = -a;
    }
    first = false;
    bool anyvar = e[0] || e[1] || e[2];
    if (a != 1 || !anyvar) {
      os << a;
      if (anyvar) os << "*";
    }
    bool firstv = true;
    for (int i = 0; i < 3; ++i) {
      if (!e[i]) continue;
      if (!firstv) os << "*";
      firstv = false;
      os << kVarNames[i];
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace octant
