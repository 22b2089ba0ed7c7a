#pragma once

#include <vector>

#include "linezero/series/spoly.hpp"

namespace linezero::series {

// Power series in z truncated after z^order, with SPoly coefficients.
// Always holds exactly order+1 coefficients.
class ZSeries {
 public:
  explicit ZSeries(unsigned order);
  ZSeries(unsigned order, std::vector<SPoly> coeffs);  // pads with zeros or drops beyond order
  // Scalar coefficients (constant SPolys).
  static ZSeries from_scalars(unsigned order, const std::vector<Rational>& coeffs);
  static ZSeries one(unsigned order);
  static ZSeries identity(unsigned order);  // the series z

  unsigned order() const { return static_cast<unsigned>(c_.size() - 1); }
  const std::vector<SPoly>& coeffs() const { return c_; }
  const SPoly& operator[](size_t k) const { return c_[k]; }
  SPoly& operator[](size_t k) { return c_[k]; }

  ZSeries truncated(unsigned order) const;

  ZSeries& operator+=(const ZSeries& o);
  ZSeries& operator-=(const ZSeries& o);
  ZSeries& operator*=(const SPoly& k);
  friend ZSeries operator+(ZSeries a, const ZSeries& b) { return a += b; }
  friend ZSeries operator-(ZSeries a, const ZSeries& b) { return a -= b; }
  friend ZSeries operator*(ZSeries a, const SPoly& k) { return a *= k; }
  friend bool operator==(const ZSeries& a, const ZSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<SPoly> c_;
};

// (1 + cmul z)^(a0 + a1 s) through z^order.
ZSeries expand_binomial_linear(const Rational& a0, const Rational& a1, const Rational& cmul, unsigned order);

// Cauchy product; both operands must have the same order.
ZSeries series_mul(const ZSeries& lhs, const ZSeries& rhs);

// base^expo through z^order; base must start with the constant 1 and carry
// at least `order` terms.
ZSeries series_real_pow(const ZSeries& base, const Rational& expo, unsigned order);

// exp(a) for a with zero constant term.
ZSeries series_exp(const ZSeries& a);

// log(base) for base with constant term 1.
ZSeries series_log(const ZSeries& base);

// b(f(z)) for f with zero constant term; result has order min(b, f).
ZSeries series_compose(const ZSeries& b, const ZSeries& f);

// a(c z)
ZSeries series_scale_argument(const ZSeries& a, const Rational& c);

}  // namespace linezero::series
