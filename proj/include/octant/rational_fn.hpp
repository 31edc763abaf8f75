#pragma once

#include <stdexcept>

#include "octant/laurent.hpp"

namespace octant {

// Quotient of Laurent polynomials. Kept in monomial-unit normal form: the
// denominator's minimal exponent is shifted to zero in every variable and its
// trailing coefficient is positive. No multivariate gcd is attempted;
// equality goes through cross-multiplication.
class RationalFn {
 public:
  RationalFn() : num_(), den_(Rat(1)) {}
  RationalFn(Laurent num, Laurent den);
  explicit RationalFn(const Laurent& num) : RationalFn(num, Laurent(Rat(1))) {}
  explicit RationalFn(const Rat& c) : RationalFn(Laurent(c)) {}

  static RationalFn variable(int axis) { return RationalFn(Laurent::variable(axis)); }

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFn inverse() const;  // throws std::domain_error on zero
  RationalFn operator-() const;
  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);

  // exact equality by cross-multiplication
  bool equals(const RationalFn& o) const;

  Rat evaluate(const std::array<Rat, 3>& v) const;
  uint64_t evaluate_mod(const ModPoint& pt, uint64_t p) const;

  // exact symbolic composition: replace variable `axis` by g
  RationalFn substitute(int axis, const RationalFn& g) const;

  std::string str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

 private:
  Laurent num_, den_;
  void normalize();
};

// substitute `axis` := g inside a Laurent polynomial
RationalFn substitute(const Laurent& f, int axis, const RationalFn& g);

}  // namespace octant
