#pragma once

#include <complex>
#include <string>
#include <vector>

#include "linezero/series/hp.hpp"
#include "linezero/series/rational.hpp"

namespace linezero::series {

// Polynomial in one variable (s, or x for the Laguerre/Meixner families) with
// exact rational coefficients. coeffs()[k] multiplies s^k; trailing zeros are
// never stored, so the zero polynomial is the empty vector.
class SPoly {
 public:
  SPoly() = default;
  explicit SPoly(std::vector<Rational> coeffs);
  SPoly(std::initializer_list<Rational> coeffs) : SPoly(std::vector<Rational>(coeffs)) {}

  static SPoly constant(const Rational& c);
  static SPoly monomial(const Rational& c, unsigned k);
  // a0 + a1 s
  static SPoly linear(const Rational& a0, const Rational& a1);

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  SPoly& operator+=(const SPoly& o);
  SPoly& operator-=(const SPoly& o);
  SPoly& operator*=(const SPoly& o);
  SPoly& operator*=(const Rational& q);
  SPoly operator-() const;

  friend SPoly operator+(SPoly a, const SPoly& b) { return a += b; }
  friend SPoly operator-(SPoly a, const SPoly& b) { return a -= b; }
  friend SPoly operator*(const SPoly& a, const SPoly& b);
  friend SPoly operator*(SPoly a, const Rational& q) { return a *= q; }
  friend SPoly operator*(const Rational& q, SPoly a) { return a *= q; }
  friend bool operator==(const SPoly& a, const SPoly& b) { return a.c_ == b.c_; }

  // P(a + b*s), re-expanded exactly.
  SPoly compose_linear(const Rational& a, const Rational& b) const;
  SPoly derivative() const;
  Rational eval(const Rational& at) const;
  std::complex<double> eval(std::complex<double> at) const;

  // "16*s^4 - 32*s^3 + 32*s^2 - 16*s"
  std::string to_string(char var = 's') const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct HPEval {
  ComplexHP value;
  // Bound on |computed - exact| from rounding in the Horner recurrence.
  HPFloat error_bound;
};

// Horner evaluation at the precision of `at` (at least 64 bits).
HPEval spoly_eval(const SPoly& poly, const ComplexHP& at);

}  // namespace linezero::series
