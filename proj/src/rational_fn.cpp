#include "octant/rational_fn.hpp"

namespace octant {

RationalFn::RationalFn(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

void RationalFn::normalize() {
  if (num_.is_zero()) {
    den_ = Laurent(Rat(1));
    return;
  }
  Exponents m = den_.min_exponents();
  Exponents shift{-m[0], -m[1], -m[2]};
  if (m != Exponents{0, 0, 0}) {
    den_ = den_.shifted(shift);
    num_ = num_.shifted(shift);
  }
  // trailing (lexicographically least) denominator coefficient positive
  if (den_.terms().begin()->second < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  // a constant denominator folds into the numerator
  if (den_.term_count() == 1 && den_.terms().begin()->first == Exponents{0, 0, 0}) {
    Rat c = den_.terms().begin()->second;
    if (c != 1) {
      num_ = num_ * Laurent(Rat(1) / c);
      den_ = Laurent(Rat(1));
    }
    return;
  }
  // full cancellation when num = c * x^e * den; keeps compositions of maps
  // with proportional one-sided parts from blowing up
  if (num_.term_count() == den_.term_count()) {
    Exponents e = num_.min_exponents();
    Laurent shifted_num = num_.shifted({-e[0], -e[1], -e[2]});
    const auto& [ne, nc] = *shifted_num.terms().begin();
    const auto& [de, dc] = *den_.terms().begin();
    if (ne == de) {
      Rat lambda = nc / dc;
      if (shifted_num == den_ * Laurent(lambda)) {
        num_ = Laurent::monomial(e, lambda);
        den_ = Laurent(Rat(1));
      }
    }
  }
}

RationalFn RationalFn::inverse() const {
  if (num_.is_zero()) throw std::domain_error("inverse of zero");
  return RationalFn(den_, num_);
}

RationalFn RationalFn::operator-() const { return RationalFn(-num_, den_); }

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

bool RationalFn::equals(const RationalFn& o) const {
  return (num_ * o.den_ - o.num_ * den_).is_zero();
}

Rat RationalFn::evaluate(const std::array<Rat, 3>& v) const {
  Rat d = den_.evaluate(v);
  if (d == 0) throw DenominatorVanishes();
  return num_.evaluate(v) / d;
}

uint64_t RationalFn::evaluate_mod(const ModPoint& pt, uint64_t p) const {
  uint64_t d = den_.evaluate_mod(pt, p);
  if (d == 0) throw DenominatorVanishes();
  uint64_t n = num_.evaluate_mod(pt, p);
  return mul_mod(n, inv_mod(d, p), p);
}

RationalFn substitute(const Laurent& f, int axis, const RationalFn& g) {
  if (f.is_zero()) return RationalFn();
  if (g.is_zero()) {
    // only legal if no term has a nonzero exponent in `axis` with negative power;
    // callers guarantee g != 0 per contract, keep a defensive check
    throw std::domain_error("substitute: zero argument");
  }
  // collect by exponent of `axis`
  int emin = INT32_MAX, emax = INT32_MIN;
  for (auto& [e, c] : f.terms()) {
    emin = std::min(emin, e[axis]);
    emax = std::max(emax, e[axis]);
  }
  // f(g) = [ sum_e c_e(rest) * gnum^(e-emin) * gden^(emax-e) ] / (gnum^(-emin) * gden^(emax))
  Laurent acc;
  for (auto& [e, c] : f.terms()) {
    Exponents rest = e;
    rest[axis] = 0;
    Laurent t = Laurent::monomial(rest, c);
    t = t * g.num().pow(static_cast<unsigned>(e[axis] - emin));
    t = t * g.den().pow(static_cast<unsigned>(emax - e[axis]));
    acc += t;
  }
  Laurent den(Rat(1));
  if (emin < 0) den = den * g.num().pow(static_cast<unsigned>(-emin));
  if (emax > 0) den = den * g.den().pow(static_cast<unsigned>(emax));
  if (emin > 0) acc = acc * g.num().pow(static_cast<unsigned>(emin));
  if (emax < 0) acc = acc * g.den().pow(static_cast<unsigned>(-emax));
  return RationalFn(acc, den);
}

RationalFn RationalFn::substitute(int axis, const RationalFn& g) const {
  RationalFn n = octant::substitute(num_, axis, g);
  RationalFn d = octant::substitute(den_, axis, g);
  return n / d;
}

}  // namespace octant
