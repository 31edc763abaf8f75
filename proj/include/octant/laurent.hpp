#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>

#include "octant/modular.hpp"

namespace octant {

using Rat = mpq_class;

// Exponent vector for (x, y, z); entries may be negative.
using Exponents = std::array<int, 3>;

inline constexpr char kVarNames[3] = {'x', 'y', 'z'};

// Multivariate Laurent polynomial over Q. No zero coefficients are stored.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(const Rat& c) {
    if (c != 0) terms_[{0, 0, 0}] = c;
  }
  explicit Laurent(long c) : Laurent(Rat(c)) {}

  static Laurent monomial(const Exponents& e, const Rat& c = Rat(1));
  static Laurent variable(int axis, int power = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rat>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  void add_term(const Exponents& e, const Rat& c);

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }

  // componentwise minimum exponent over the support; {0,0,0} for the zero poly
  Exponents min_exponents() const;

  // multiply by the monomial x^e (exact shift)
  Laurent shifted(const Exponents& e) const;

  Laurent pow(unsigned n) const;

  // exact evaluation; coordinates must be nonzero wherever a negative
  // exponent occurs (throws DenominatorVanishes otherwise)
  Rat evaluate(const std::array<Rat, 3>& v) const;
  uint64_t evaluate_mod(const ModPoint& pt, uint64_t p) const;

  std::string str() const;

 private:
  std::map<Exponents, Rat> terms_;
};

}  // namespace octant
