#include "linezero/series/zseries.hpp"

#include <algorithm>

#include "linezero/error.hpp"

namespace linezero::series {

ZSeries::ZSeries(unsigned order) : c_(order + 1) {}

ZSeries::ZSeries(unsigned order, std::vector<SPoly> coeffs) : c_(std::move(coeffs)) { c_.resize(order + 1); }

ZSeries ZSeries::from_scalars(unsigned order, const std::vector<Rational>& coeffs) {
  ZSeries r(order);
  for (size_t k = 0; k < coeffs.size() && k <= order; ++k) r.c_[k] = SPoly::constant(coeffs[k]);
  return r;
}

ZSeries ZSeries::one(unsigned order) { return from_scalars(order, {Rational(1)}); }

ZSeries ZSeries::identity(unsigned order) { return from_scalars(order, {Rational(0), Rational(1)}); }

ZSeries ZSeries::truncated(unsigned order) const {
  if (order > this->order()) throw DomainError("cannot extend a truncated series beyond its order");
  return ZSeries(order, std::vector<SPoly>(c_.begin(), c_.begin() + order + 1));
}

ZSeries& ZSeries::operator+=(const ZSeries& o) {
  if (o.order() != order()) throw DomainError("series orders differ");
  for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

ZSeries& ZSeries::operator-=(const ZSeries& o) {
  if (o.order() != order()) throw DomainError("series orders differ");
  for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

ZSeries& ZSeries::operator*=(const SPoly& k) {
  for (auto& c : c_) c = c * k;
  return *this;
}

ZSeries expand_binomial_linear(const Rational& a0, const Rational& a1, const Rational& cmul, unsigned order) {
  // C(x, k) cmul^k built incrementally: C(x, k) = C(x, k-1) (x - k + 1) / k.
  ZSeries r(order);
  SPoly term = SPoly::constant(1);
  r[0] = term;
  for (unsigned k = 1; k <= order; ++k) {
    term *= SPoly::linear(a0 - (k - 1), a1);
    term *= cmul / Rational(k);
    r[k] = term;
  }
  return r;
}

ZSeries series_mul(const ZSeries& lhs, const ZSeries& rhs) {
  if (lhs.order() != rhs.order())
    throw DomainError("series_mul: truncation orders differ (" + std::to_string(lhs.order()) + " vs " +
                      std::to_string(rhs.order()) + ")");
  const unsigned n = lhs.order();
  ZSeries r(n);
  for (unsigned i = 0; i <= n; ++i) {
    if (lhs[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= n; ++j) {
      if (rhs[j].is_zero()) continue;
      r[i + j] += lhs[i] * rhs[j];
    }
  }
  return r;
}

ZSeries series_real_pow(const ZSeries& base, const Rational& expo, unsigned order) {
  if (!(base[0] == SPoly::constant(1))) throw DomainError("series_real_pow: constant term must be 1");
  if (base.order() < order) throw DomainError("series_real_pow: base truncated below requested order");
  // B = base^a satisfies base * B' = a base' B, giving
  // k B_k = sum_{j=1..k} (a j - (k - j)) base_j B_{k-j}.
  ZSeries r(order);
  r[0] = SPoly::constant(1);
  for (unsigned k = 1; k <= order; ++k) {
    SPoly acc;
    for (unsigned j = 1; j <= k; ++j) {
      if (base[j].is_zero()) continue;
      Rational w = expo * j - Rational(k - j);
      if (sgn(w) == 0) continue;
      acc += (base[j] * r[k - j]) * w;
    }
    r[k] = acc * Rational(1, k);
  }
  return r;
}

ZSeries series_exp(const ZSeries& a) {
  if (!a[0].is_zero()) throw DomainError("series_exp: constant term must vanish");
  const unsigned n = a.order();
  // E' = a' E: k E_k = sum_{j=1..k} j a_j E_{k-j}.
  ZSeries r(n);
  r[0] = SPoly::constant(1);
  for (unsigned k = 1; k <= n; ++k) {
    SPoly acc;
    for (unsigned j = 1; j <= k; ++j) {
      if (a[j].is_zero()) continue;
      acc += (a[j] * r[k - j]) * Rational(j);
    }
    r[k] = acc * Rational(1, k);
  }
  return r;
}

ZSeries series_log(const ZSeries& base) {
  if (!(base[0] == SPoly::constant(1))) throw DomainError("series_log: constant term must be 1");
  const unsigned n = base.order();
  // L' base = base': k L_k = k b_k - sum_{j=1..k-1} j L_j b_{k-j}.
  ZSeries r(n);
  for (unsigned k = 1; k <= n; ++k) {
    SPoly acc = base[k] * Rational(k);
    for (unsigned j = 1; j < k; ++j) {
      if (r[j].is_zero() || base[k - j].is_zero()) continue;
      acc -= (r[j] * base[k - j]) * Rational(j);
    }
    r[k] = acc * Rational(1, k);
  }
  return r;
}

ZSeries series_compose(const ZSeries& b, const ZSeries& f) {
  if (!f[0].is_zero()) throw DomainError("series_compose: inner series must have zero constant term");
  const unsigned n = std::min(b.order(), f.order());
  ZSeries inner = f.truncated(n);
  // Horner: b_0 + f (b_1 + f (b_2 + ...)); terms beyond order n vanish since f = O(z).
  ZSeries r(n);
  for (unsigned k = n + 1; k-- > 0;) {
    r = series_mul(r, inner);
    r[0] += b[k];
  }
  return r;
}

ZSeries series_scale_argument(const ZSeries& a, const Rational& c) {
  ZSeries r = a;
  Rational w = 1;
  for (unsigned k = 1; k <= r.order(); ++k) {
    w *= c;
    r[k] *= SPoly::constant(w);
  }
  return r;
}

}  // namespace linezero::series
