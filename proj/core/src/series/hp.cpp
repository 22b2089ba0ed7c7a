#include "linezero/series/hp.hpp"

#include <algorithm>
#include <vector>

namespace linezero::series {

HPFloat::HPFloat(long bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

HPFloat::HPFloat(double x, long bits) {
  mpfr_init2(v_, bits);
  mpfr_set_d(v_, x, MPFR_RNDN);
}

HPFloat::HPFloat(const Rational& q, long bits) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

HPFloat::HPFloat(const Integer& z, long bits) {
  mpfr_init2(v_, bits);
  mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
}

HPFloat::HPFloat(const HPFloat& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

HPFloat::HPFloat(HPFloat&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

HPFloat& HPFloat::operator=(const HPFloat& other) {
  if (this != &other) {
    if (mpfr_get_prec(v_) != mpfr_get_prec(other.v_)) mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

HPFloat& HPFloat::operator=(HPFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

HPFloat::~HPFloat() { mpfr_clear(v_); }

void HPFloat::set_bits(long bits) { mpfr_prec_round(v_, bits, MPFR_RNDN); }

std::string HPFloat::to_string(int digits) const {
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", std::max(digits - 1, 0), v_);
  return buf.data();
}

long HPFloat::exponent() const {
  if (mpfr_zero_p(v_)) return -(1L << 40);
  return static_cast<long>(mpfr_get_exp(v_));
}

namespace {
long widest(const HPFloat& a, const HPFloat& b) { return std::max(a.bits(), b.bits()); }
}  // namespace

HPFloat& HPFloat::operator+=(const HPFloat& o) {
  if (o.bits() > bits()) set_bits(o.bits());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

HPFloat& HPFloat::operator-=(const HPFloat& o) {
  if (o.bits() > bits()) set_bits(o.bits());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

HPFloat& HPFloat::operator*=(const HPFloat& o) {
  if (o.bits() > bits()) set_bits(o.bits());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

HPFloat& HPFloat::operator/=(const HPFloat& o) {
  if (o.bits() > bits()) set_bits(o.bits());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

HPFloat HPFloat::operator-() const {
  HPFloat r(bits());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

HPFloat abs(const HPFloat& x) {
  HPFloat r(x.bits());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

HPFloat sqrt(const HPFloat& x) {
  HPFloat r(x.bits());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

HPFloat hypot(const HPFloat& x, const HPFloat& y) {
  HPFloat r(widest(x, y));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

HPFloat exp2(long e, long bits) {
  HPFloat r(bits);
  mpfr_set_ui_2exp(r.raw(), 1, e, MPFR_RNDN);
  return r;
}

ComplexHP::ComplexHP(const HPFloat& re, const HPFloat& im) : re_(re), im_(im) {
  long b = std::max(re_.bits(), im_.bits());
  re_.set_bits(b);
  im_.set_bits(b);
}

ComplexHP& ComplexHP::operator+=(const ComplexHP& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ComplexHP& ComplexHP::operator-=(const ComplexHP& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ComplexHP& ComplexHP::operator*=(const ComplexHP& o) {
  HPFloat r = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  return *this;
}

ComplexHP& ComplexHP::operator/=(const ComplexHP& o) {
  HPFloat d = norm(o);
  HPFloat r = (re_ * o.re_ + im_ * o.im_) / d;
  im_ = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(r);
  return *this;
}

ComplexHP conj(const ComplexHP& z) { return ComplexHP(z.real(), -z.imag()); }

HPFloat abs(const ComplexHP& z) { return hypot(z.real(), z.imag()); }

HPFloat norm(const ComplexHP& z) { return z.real() * z.real() + z.imag() * z.imag(); }

}  // namespace linezero::series
