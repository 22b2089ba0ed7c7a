#include "linezero/sheffer/riordan.hpp"

#include "linezero/error.hpp"

namespace linezero::sheffer {

using series::factorial;

namespace {

void check_pair(const ZSeries& g, const ZSeries& f) {
  if (g.order() != f.order()) throw DomainError("riordan: g and f must share a truncation order");
  for (unsigned k = 0; k <= g.order(); ++k)
    if (g[k].degree() > 0 || f[k].degree() > 0) throw DomainError("riordan: g and f must have constant coefficients");
  if (g[0].is_zero()) throw DomainError("riordan: g(0) must be nonzero");
  if (!f[0].is_zero()) throw DomainError("riordan: f(0) must vanish");
  if (f.order() < 1 || f[1].is_zero()) throw DomainError("riordan: f'(0) must be nonzero");
}

}  // namespace

RiordanMatrix::RiordanMatrix(ZSeries g, ZSeries f) : g_(std::move(g)), f_(std::move(f)) {
  check_pair(g_, f_);
  const unsigned n = order();
  entries_.assign(n + 1, {});
  for (unsigned r = 0; r <= n; ++r) entries_[r].assign(r + 1, Rational(0));
  ZSeries col = g_;  // g f^k
  for (unsigned k = 0; k <= n; ++k) {
    for (unsigned r = k; r <= n; ++r) entries_[r][k] = col[r].coeff(0) * series::ratio(factorial(r), factorial(k));
    col = series::series_mul(col, f_);
  }
}

Rational RiordanMatrix::entry(unsigned n, unsigned k) const {
  if (n > order()) throw DomainError("riordan: row beyond truncation order");
  return k > n ? Rational(0) : entries_[n][k];
}

ZSeries RiordanMatrix::apply(const ZSeries& b) const {
  return series::series_mul(g_, series::series_compose(b.truncated(order()), f_));
}

std::vector<SPoly> RiordanMatrix::apply_sequence(const std::vector<SPoly>& x) const {
  const unsigned n = std::min<unsigned>(order(), static_cast<unsigned>(x.size()) - 1);
  std::vector<SPoly> y(n + 1);
  for (unsigned r = 0; r <= n; ++r)
    for (unsigned k = 0; k <= r; ++k)
      if (sgn(entries_[r][k]) != 0) y[r] += x[k] * entries_[r][k];
  return y;
}

RiordanMatrix RiordanMatrix::product(const RiordanMatrix& rhs) const {
  if (rhs.order() != order()) throw DomainError("riordan: product of arrays with different orders");
  return RiordanMatrix(series::series_mul(g_, series::series_compose(rhs.g_, f_)),
                       series::series_compose(rhs.f_, f_));
}

Rational riordan_entry(const ZSeries& g, const ZSeries& f, unsigned n, unsigned k) {
  check_pair(g, f);
  if (n > g.order()) throw DomainError("riordan: row beyond truncation order");
  if (k > n) return 0;
  ZSeries col = g;
  for (unsigned j = 0; j < k; ++j) col = series::series_mul(col, f);
  return col[n].coeff(0) * series::ratio(factorial(n), factorial(k));
}

ZSeries riordan_apply(const ZSeries& g, const ZSeries& f, const ZSeries& b) {
  check_pair(g, f);
  return series::series_mul(g, series::series_compose(b.truncated(g.order()), f));
}

ZSeries product_g(const ParamSet& params, unsigned order) {
  ZSeries prod = ZSeries::one(order);
  const auto beta = params.normalized_alpha();
  for (size_t i = 0; i < beta.size(); ++i) {
    ZSeries base = ZSeries::from_scalars(order, {Rational(1), Rational(0), Rational(-beta[i] * beta[i])});
    prod = series::series_mul(prod, series::series_real_pow(base, params.pexp()[i], order));
  }
  return prod;
}

ZSeries log_ratio_f(unsigned order) {
  ZSeries f(order);
  for (unsigned k = 1; k <= order; k += 2) f[k] = SPoly::constant(Rational(-2, k));
  return f;
}

ZSeries q_egf(const ParamSet& params, unsigned order) {
  ZSeries g0 = series::series_mul(series::expand_binomial_linear(params.p(), 0, -1, order),
                                  series::expand_binomial_linear(params.pstar(), 0, 1, order));
  ZSeries esf = series::series_exp(log_ratio_f(order) * SPoly::linear(0, 1));
  return series::series_mul(g0, esf);
}

}  // namespace linezero::sheffer
