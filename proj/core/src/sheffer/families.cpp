#include "linezero/sheffer/families.hpp"

#include <cmath>

#include "linezero/error.hpp"

namespace linezero::sheffer {

using series::factorial;
using series::falling;
using series::Integer;

namespace {

// Full symbolic cross-checks are quadratic-to-quartic in n; beyond this we
// fall back to checks at fixed rational points.
constexpr unsigned kFullCheckLimit = 40;

const std::vector<Rational>& probe_points() {
  static const std::vector<Rational> pts{Rational(2, 7), Rational(-5, 3), Rational(13, 4)};
  return pts;
}

// (p + s) log(1 - z) + (p* - s) log(1 + z)
ZSeries q_exponent(unsigned order, const Rational& p, const Rational& pstar) {
  ZSeries e(order);
  for (unsigned k = 1; k <= order; ++k) {
    Rational lm = Rational(-1, k);                         // [z^k] log(1 - z)
    Rational lp = Rational(k % 2 ? 1 : -1, k);             // [z^k] log(1 + z)
    e[k] = SPoly::linear(p * lm + pstar * lp, lm - lp);
  }
  return e;
}

SPoly q_by_series(unsigned n, const Rational& p, const Rational& pstar) {
  ZSeries g = series::series_exp(q_exponent(n, p, pstar));
  return g[n] * Rational(factorial(n));
}

// C(a0 + a1 s, k) as a polynomial
SPoly binom_poly(const Rational& a0, const Rational& a1, unsigned k) {
  SPoly r = SPoly::constant(1);
  for (unsigned j = 0; j < k; ++j) r *= SPoly::linear(a0 - j, a1);
  return r * series::ratio(1, factorial(k));
}

SPoly q_by_binomial_sum(unsigned n, const Rational& p, const Rational& pstar) {
  SPoly acc;
  for (unsigned k = 0; k <= n; ++k) {
    SPoly term = binom_poly(p, 1, k) * binom_poly(pstar, -1, n - k);
    acc += (k % 2) ? -term : term;
  }
  return acc * Rational(factorial(n));
}

// The binomial sum at a rational point, O(n) scalar work.
Rational q_binomial_sum_at(unsigned n, const Rational& p, const Rational& pstar, const Rational& s) {
  const Rational x = p + s, y = pstar - s;
  std::vector<Rational> cy(n + 1);  // C(y, j)
  cy[0] = 1;
  for (unsigned j = 1; j <= n; ++j) cy[j] = cy[j - 1] * (y - (j - 1)) / j;
  Rational cx = 1, acc = 0;
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) cx = cx * (x - (k - 1)) / k;
    Rational term = cx * cy[n - k];
    acc += (k % 2) ? Rational(-term) : term;
  }
  return acc * Rational(factorial(n));
}

ZSeries scalar_gf(unsigned order, const ParamSet& params, const Rational& s) {
  const Rational& a0 = params.alpha()[0];
  ZSeries g = series::series_mul(series::expand_binomial_linear(params.p() + s, 0, -a0, order),
                                 series::expand_binomial_linear(params.pstar() - s, 0, a0, order));
  for (size_t i = 0; i < params.N(); ++i) {
    const Rational& ai = params.alpha()[i + 1];
    ZSeries base = ZSeries::from_scalars(order, {Rational(1), Rational(0), Rational(-ai * ai)});
    g = series::series_mul(g, series::series_real_pow(base, params.pexp()[i], order));
  }
  return g;
}

void require_equal(const SPoly& a, const SPoly& b, const char* what, unsigned n) {
  if (!(a == b))
    throw CrossCheckError(std::string(what) + " disagree at n=" + std::to_string(n) + ": " + a.to_string() +
                          " vs " + b.to_string());
}

}  // namespace

std::vector<Rational> coeff_b(const ParamSet& params, unsigned upto) {
  ZSeries prod = ZSeries::one(upto);
  const auto beta = params.normalized_alpha();
  for (size_t i = 0; i < beta.size(); ++i) {
    ZSeries base = ZSeries::from_scalars(upto, {Rational(1), Rational(0), Rational(-beta[i] * beta[i])});
    prod = series::series_mul(prod, series::series_real_pow(base, params.pexp()[i], upto));
  }
  std::vector<Rational> b(upto + 1);
  for (unsigned k = 0; k <= upto; ++k) b[k] = prod[k].coeff(0);
  return b;
}

SPoly gen_q(unsigned n, const Rational& p, const Rational& pstar) {
  if (n > kFullCheckLimit) return q_table(n, p, pstar).back();
  SPoly a = q_by_series(n, p, pstar);
  SPoly b = q_by_binomial_sum(n, p, pstar);
  require_equal(a, b, "q_n series and binomial sum", n);
  return a;
}

SPoly three_term_next(const SPoly& qn, const SPoly& qnm1, unsigned n, const Rational& p, const Rational& pstar) {
  SPoly r = SPoly::linear(pstar - p, -2) * qn;
  if (n > 0) r += qnm1 * Rational(Rational(n) * (Rational(n) - pstar - p - 1));
  return r;
}

std::vector<SPoly> q_table(unsigned nmax, const Rational& p, const Rational& pstar) {
  std::vector<SPoly> q;
  q.reserve(nmax + 1);
  q.push_back(SPoly::constant(1));
  for (unsigned n = 0; n < nmax; ++n) q.push_back(three_term_next(q[n], n ? q[n - 1] : SPoly(), n, p, pstar));
  for (unsigned n = 0; n <= nmax; ++n) {
    if (n > 64 && n != nmax) continue;
    if (n <= 8) require_equal(q[n], q_by_binomial_sum(n, p, pstar), "q_n recurrence and binomial sum", n);
    for (const auto& s : probe_points())
      if (q[n].eval(s) != q_binomial_sum_at(n, p, pstar, s))
        throw CrossCheckError("q_n recurrence disagrees with the binomial sum at n=" + std::to_string(n) +
                              ", s=" + series::to_string(s));
  }
  return q;
}

namespace {

// Convolution sum_k n!/k! b_{n-k} q_k scaled by alpha_0^n.
SPoly h_from_parts(unsigned n, const std::vector<Rational>& b, const std::vector<SPoly>& q, const Rational& a0) {
  SPoly acc;
  for (unsigned k = 0; k <= n; ++k) {
    const Rational& bk = b[n - k];
    if (sgn(bk) == 0) continue;
    acc += q[k] * bk * series::ratio(factorial(n), factorial(k));
  }
  return acc * series::pow(a0, n);
}

void check_h_points(unsigned n, const SPoly& h, const ParamSet& params) {
  for (const auto& s : probe_points())
    if (h.eval(s) != h_value_from_series(n, params, s))
      throw CrossCheckError("h_n convolution disagrees with the generating function at n=" + std::to_string(n) +
                            ", s=" + series::to_string(s));
}

}  // namespace

Rational h_value_from_series(unsigned n, const ParamSet& params, const Rational& s) {
  return scalar_gf(n, params, s)[n].coeff(0) * Rational(factorial(n));
}

SPoly gen_h(unsigned n, const ParamSet& params) {
  auto b = coeff_b(params, n);
  std::vector<SPoly> q;
  if (n <= kFullCheckLimit) {
    for (unsigned k = 0; k <= n; ++k) q.push_back(gen_q(k, params.p(), params.pstar()));
  } else {
    q = q_table(n, params.p(), params.pstar());
  }
  SPoly h = h_from_parts(n, b, q, params.alpha()[0]);

  if (n <= kFullCheckLimit) {
    // Direct expansion of the generating function with symbolic s.
    const Rational& a0 = params.alpha()[0];
    ZSeries g = series::series_mul(series::expand_binomial_linear(params.p(), 1, -a0, n),
                                   series::expand_binomial_linear(params.pstar(), -1, a0, n));
    for (size_t i = 0; i < params.N(); ++i) {
      const Rational& ai = params.alpha()[i + 1];
      ZSeries base = ZSeries::from_scalars(n, {Rational(1), Rational(0), Rational(-ai * ai)});
      g = series::series_mul(g, series::series_real_pow(base, params.pexp()[i], n));
    }
    require_equal(h, g[n] * Rational(factorial(n)), "h_n convolution and direct expansion", n);
  } else {
    check_h_points(n, h, params);
  }
  return h;
}

std::vector<SPoly> h_table(unsigned nmax, const ParamSet& params) {
  auto b = coeff_b(params, nmax);
  auto q = q_table(nmax, params.p(), params.pstar());
  std::vector<SPoly> h;
  h.reserve(nmax + 1);
  for (unsigned n = 0; n <= nmax; ++n) {
    h.push_back(h_from_parts(n, b, q, params.alpha()[0]));
    check_h_points(n, h.back(), params);
  }
  return h;
}

bool shift_recurrence_check(unsigned n, const Rational& p, const Rational& pstar) {
  SPoly qn = gen_q(n, p, pstar);
  SPoly lhs = gen_q(n + 1, p, pstar) * Rational(2);
  SPoly rhs = SPoly::linear(pstar - p, -2) * qn + SPoly::linear(pstar, -1) * qn.compose_linear(1, 1) -
              SPoly::linear(p, 1) * qn.compose_linear(-1, 1);
  return lhs == rhs;
}

bool functional_eq_check(unsigned n, const Rational& p, const Rational& pstar) {
  SPoly q = gen_q(n, p, pstar);
  SPoly mirrored = q.compose_linear(pstar - p, -1);
  if (n % 2) mirrored = -mirrored;
  return (q - mirrored).is_zero();
}

SPoly meixner(unsigned n, const Rational& b, const Rational& cpar) {
  if (sgn(cpar) == 0 || cpar == 1) throw DomainError("meixner: c must differ from 0 and 1");
  ZSeries g = series::series_mul(series::expand_binomial_linear(0, 1, -1 / cpar, n),
                                 series::expand_binomial_linear(-b, -1, -1, n));
  return g[n] * Rational(factorial(n));
}

SPoly q_via_meixner(unsigned n, const Rational& p, const Rational& pstar) {
  SPoly acc;
  for (unsigned k = 0; k <= n; ++k) {
    Rational delta = Rational(series::binomial(n, k)) * falling(pstar, n - k);
    if (sgn(delta) == 0) continue;
    acc += meixner(k, -p, -1).compose_linear(0, -1) * delta;
  }
  return acc;
}

SPoly laguerre(unsigned n, const Rational& alpha) {
  ZSeries e(n);
  for (unsigned k = 1; k <= n; ++k) e[k] = SPoly::linear(0, -1);  // -x z/(1-z)
  ZSeries g = series::series_mul(series::expand_binomial_linear(-alpha - 1, 0, -1, n), series::series_exp(e));
  return g[n];
}

double PhiFunction::operator()(double s) const { return prefactor.eval(std::complex<double>(s, 0)).real() * std::exp(-s / 2); }

PhiFunction phi_n(unsigned n, const Rational& p, const Rational& pstar) {
  SPoly acc;
  for (unsigned k = 0; k <= n; ++k) {
    Rational w = Rational(series::binomial(n, k)) * falling(pstar, n - k) * Rational(factorial(k));
    if (sgn(w) == 0) continue;
    acc += laguerre(k, -p - 1) * w;
  }
  return {acc};
}

SPoly bump_P(unsigned n, const Rational& alpha) {
  return gen_q(n, -1 - alpha / 2, -alpha / 2) * series::ratio(1, factorial(n));
}

}  // namespace linezero::sheffer
