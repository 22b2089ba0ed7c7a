#pragma once

#include <mpfr.h>

#include <complex>
#include <string>

#include "linezero/series/rational.hpp"

namespace linezero::series {

inline constexpr long kDefaultBits = 256;

// RAII wrapper over mpfr_t. Every value carries its own precision; binary
// operators produce a result at the larger of the two operand precisions.
class HPFloat {
 public:
  explicit HPFloat(long bits = kDefaultBits);
  HPFloat(double x, long bits);
  HPFloat(const Rational& q, long bits);
  HPFloat(const Integer& z, long bits);
  HPFloat(const HPFloat& other);
  HPFloat(HPFloat&& other) noexcept;
  HPFloat& operator=(const HPFloat& other);
  HPFloat& operator=(HPFloat&& other) noexcept;
  ~HPFloat();

  long bits() const { return static_cast<long>(mpfr_get_prec(v_)); }
  // Changes precision, rounding the current value.
  void set_bits(long bits);

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
  // Scientific notation with the given number of significant digits.
  std::string to_string(int digits = 20) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // floor(log2 |x|) style magnitude; huge negative for zero.
  long exponent() const;

  HPFloat& operator+=(const HPFloat& o);
  HPFloat& operator-=(const HPFloat& o);
  HPFloat& operator*=(const HPFloat& o);
  HPFloat& operator/=(const HPFloat& o);
  HPFloat operator-() const;

  friend HPFloat operator+(HPFloat a, const HPFloat& b) { return a += b; }
  friend HPFloat operator-(HPFloat a, const HPFloat& b) { return a -= b; }
  friend HPFloat operator*(HPFloat a, const HPFloat& b) { return a *= b; }
  friend HPFloat operator/(HPFloat a, const HPFloat& b) { return a /= b; }

  friend bool operator<(const HPFloat& a, const HPFloat& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const HPFloat& a, const HPFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const HPFloat& a, const HPFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const HPFloat& a, const HPFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const HPFloat& a, const HPFloat& b) { return mpfr_equal_p(a.v_, b.v_); }

 private:
  mpfr_t v_;
};

HPFloat abs(const HPFloat& x);
HPFloat sqrt(const HPFloat& x);
HPFloat hypot(const HPFloat& x, const HPFloat& y);
// 2^e at the given precision.
HPFloat exp2(long e, long bits);

// Complex value whose two parts always share one working precision.
class ComplexHP {
 public:
  explicit ComplexHP(long bits = kDefaultBits) : re_(bits), im_(bits) {}
  ComplexHP(const HPFloat& re, const HPFloat& im);
  ComplexHP(std::complex<double> z, long bits) : re_(z.real(), bits), im_(z.imag(), bits) {}
  ComplexHP(const Rational& re, const Rational& im, long bits) : re_(re, bits), im_(im, bits) {}

  long bits() const { return re_.bits(); }
  void set_bits(long bits) {
    re_.set_bits(bits);
    im_.set_bits(bits);
  }

  const HPFloat& real() const { return re_; }
  const HPFloat& imag() const { return im_; }
  HPFloat& real() { return re_; }
  HPFloat& imag() { return im_; }

  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

  ComplexHP& operator+=(const ComplexHP& o);
  ComplexHP& operator-=(const ComplexHP& o);
  ComplexHP& operator*=(const ComplexHP& o);
  ComplexHP& operator/=(const ComplexHP& o);
  ComplexHP operator-() const { return ComplexHP(-re_, -im_); }

  friend ComplexHP operator+(ComplexHP a, const ComplexHP& b) { return a += b; }
  friend ComplexHP operator-(ComplexHP a, const ComplexHP& b) { return a -= b; }
  friend ComplexHP operator*(ComplexHP a, const ComplexHP& b) { return a *= b; }
  friend ComplexHP operator/(ComplexHP a, const ComplexHP& b) { return a /= b; }

 private:
  HPFloat re_, im_;
};

ComplexHP conj(const ComplexHP& z);
HPFloat abs(const ComplexHP& z);
HPFloat norm(const ComplexHP& z);  // |z|^2

}  // namespace linezero::series
