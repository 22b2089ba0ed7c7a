#include "linezero/series/spoly.hpp"

#include <algorithm>
#include <sstream>

#include "linezero/error.hpp"

namespace linezero::series {

SPoly::SPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

SPoly SPoly::constant(const Rational& c) { return SPoly(std::vector<Rational>{c}); }

SPoly SPoly::monomial(const Rational& c, unsigned k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return SPoly(std::move(v));
}

SPoly SPoly::linear(const Rational& a0, const Rational& a1) { return SPoly(std::vector<Rational>{a0, a1}); }

void SPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

SPoly& SPoly::operator+=(const SPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

SPoly& SPoly::operator-=(const SPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

SPoly operator*(const SPoly& a, const SPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return SPoly(std::move(r));
}

SPoly& SPoly::operator*=(const SPoly& o) { return *this = *this * o; }

SPoly& SPoly::operator*=(const Rational& q) {
  if (sgn(q) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= q;
  return *this;
}

SPoly SPoly::operator-() const {
  SPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

SPoly SPoly::compose_linear(const Rational& a, const Rational& b) const {
  // Horner in the polynomial ring: ((c_n)(a+bs) + c_{n-1})(a+bs) + ...
  SPoly lin = linear(a, b);
  SPoly r;
  for (size_t k = c_.size(); k-- > 0;) r = r * lin + constant(c_[k]);
  return r;
}

SPoly SPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return SPoly(std::move(d));
}

Rational SPoly::eval(const Rational& at) const {
  Rational r = 0;
  for (size_t k = c_.size(); k-- > 0;) r = r * at + c_[k];
  return r;
}

std::complex<double> SPoly::eval(std::complex<double> at) const {
  std::complex<double> r = 0;
  for (size_t k = c_.size(); k-- > 0;) r = r * at + c_[k].get_d();
  return r;
}

std::string SPoly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = c_.size(); k-- > 0;) {
    const Rational& a = c_[k];
    if (sgn(a) == 0) continue;
    Rational mag = abs(a);
    if (first) {
      if (sgn(a) < 0) os << '-';
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (k == 0 || !unit) os << series::to_string(mag);
    if (k > 0) {
      if (!unit) os << '*';
      os << var;
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

HPEval spoly_eval(const SPoly& poly, const ComplexHP& at) {
  const long bits = std::max(at.bits(), 64L);
  ComplexHP z = at;
  z.set_bits(bits);
  ComplexHP acc(bits);
  HPFloat modulus = abs(z);
  HPFloat magnitude(bits);  // sum |a_k| |z|^k, via the same Horner shape
  const auto& c = poly.coeffs();
  for (size_t k = c.size(); k-- > 0;) {
    acc *= z;
    HPFloat ck(c[k], bits);
    acc.real() += ck;
    magnitude *= modulus;
    magnitude += abs(ck);
  }
  // Complex Horner: each step is one complex multiply-add, at most ~6 roundings
  // relative to the running magnitude; add one for the coefficient conversion.
  const double steps = 8.0 * static_cast<double>(c.size() + 1);
  HPFloat bound = magnitude * HPFloat(steps, bits) * exp2(-bits, bits);
  return {std::move(acc), std::move(bound)};
}

}  // namespace linezero::series
