#include "linezero/asymptotics/pn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "linezero/error.hpp"
#include "linezero/series/hp.hpp"
#include "linezero/series/spoly.hpp"
#include "linezero/sheffer/families.hpp"
#include "linezero/special/gamma_zeta.hpp"
#include "linezero/special/quadrature.hpp"

namespace linezero::asymptotics {

namespace {
const cplx I{0, 1};
constexpr double kPi = std::numbers::pi;

double curve_extent(unsigned n, const FloatParams& fp) {
  return std::max(default_y_neg_max(n, fp), std::log(double(n)) / std::sqrt(double(n)));
}

bool on_cut(double zl, const FloatParams& fp) {
  for (size_t i = 0; i < fp.beta.size(); ++i) {
    const double b = std::abs(fp.beta[i]);
    if (b > 1 && fp.pexp[i] != std::floor(fp.pexp[i]) && zl >= 1 / b) return true;
  }
  return false;
}
}  // namespace

ScaledComplex ScaledComplex::from_log(cplx log_value) {
  return {std::exp(I * log_value.imag()), log_value.real()};
}

cplx ScaledComplex::value() const { return mantissa * std::exp(log_scale); }

double ScaledComplex::log_abs() const { return std::log(std::abs(mantissa)) + log_scale; }

ScaledComplex ScaledComplex::normalized() const {
  const double m = std::abs(mantissa);
  if (m == 0 || !std::isfinite(m)) return *this;
  return {mantissa / m, log_scale + std::log(m)};
}

cplx ratio(const ScaledComplex& a, const ScaledComplex& b) {
  return a.mantissa / b.mantissa * std::exp(a.log_scale - b.log_scale);
}

double default_y_neg_max(unsigned n, const FloatParams& fp) {
  const double A = std::max(0.0, 2 * fp.growth()) + 0.5;
  if (!(double(n) > A))
    throw DomainError("p_n: the Hankel integral does not converge at infinity for n = " + std::to_string(n));
  return std::sqrt(std::log(1e17) / (double(n) - A));
}

PnResult p_n_contour(unsigned n, double t, const FloatParams& fp, const PnOptions& opt) {
  ContourCurve curve(t, curve_extent(n, fp), opt.trace);
  return p_n_contour(n, curve, fp, opt);
}

PnResult p_n_contour(unsigned n, const ContourCurve& curve, const FloatParams& fp, const PnOptions& opt) {
  if (n == 0) throw DomainError("p_n: n must be positive");
  const double t = curve.t();
  const double ymax = default_y_neg_max(n, fp);
  if (curve.y_min() > -ymax * (1 - 1e-12)) throw DomainError("p_n: traced curve is shorter than the truncation point");

  const SaddleData& sd = curve.saddle();
  const cplx log_psi0 = phi_eval(sd.zeta, t, fp).log_psi;
  const double shift = log_psi0.real();
  const double nd = n;

  special::QuadOptions qo;
  qo.reltol = opt.reltol;
  auto on_curve = [&](double y) -> cplx {
    CurveSample s = curve.at(y);
    cplx lp = phi_eval(s.z, t, fp).log_psi;
    return std::exp(lp - shift - nd * y * y) * s.dz;
  };
  auto left = special::integrate_gauss_kronrod(on_curve, -ymax, 0.0, qo);
  auto right = special::integrate_gauss_kronrod(on_curve, 0.0, curve.L(), qo);
  const cplx curve_int = left.value + right.value;

  const cplx zl(curve.z_L(), 0.0);
  auto ray = [&](double u) -> cplx {
    const cplx z = zl + I * u;
    PhiValues v = phi_eval(z, t, fp);
    return I * std::exp(v.log_psi - shift + nd * (v.phi - sd.phi_at));
  };
  special::QuadOptions qr = qo;
  qr.abstol = 1e-3 * opt.reltol * std::abs(curve_int);
  auto vert = special::integrate_exp_sinh(ray, 0.0, qr);

  const cplx J = curve_int + vert.value;
  PnResult r;
  r.value = ScaledComplex{J * std::exp(I * (nd * sd.phi_at.imag())), nd * sd.phi_at.real() + shift}.normalized();
  const double aj = std::abs(J);
  r.rel_error = (left.abs_error_estimate + right.abs_error_estimate + vert.abs_error_estimate) / aj;
  r.L = curve.L();
  r.z_L = curve.z_L();
  r.y_neg_max = ymax;
  r.curve_part = std::abs(curve_int) / aj;
  r.converged = left.converged && right.converged && vert.converged;
  r.cut_warning = on_cut(curve.z_L(), fp);
  r.evaluations = left.evaluations + right.evaluations + vert.evaluations;
  return r;
}

const char* to_string(AsympMode m) { return m == AsympMode::small_t ? "small_t" : "global"; }

AsympMode parse_asymp_mode(const std::string& text) {
  if (text == "small_t" || text == "small-t") return AsympMode::small_t;
  if (text == "global") return AsympMode::global;
  throw DomainError("unknown asymptotic mode '" + text + "' (expected small_t or global)");
}

AsympResult asymp_formula(unsigned n, double t, const FloatParams& fp, AsympMode mode) {
  if (!(t > 0 && t < 1)) throw DomainError("asymp_formula: t must lie in (0,1)");
  if (n == 0) throw DomainError("asymp_formula: n must be positive");
  const double nd = n, nt = nd * t, l4 = std::pow(std::log(nd), 4);
  if (mode == AsympMode::global) {
    ContourCurve curve(t, curve_extent(n, fp));
    return asymp_global(n, curve, fp);
  }
  AsympResult r;
  // i sin(pi a) Gamma(a) = i pi / Gamma(1 - a), a = c + p + 1 - int.
  const double cp = fp.p0();
  cplx lg = std::log(kPi) + I * (kPi / 2) - special::lgamma_c(cplx(-cp, nt));
  lg += cplx(cp + 1, nt) * std::numbers::ln2;
  for (size_t i = 0; i < fp.beta.size(); ++i) lg += fp.pexp[i] * std::log(cplx(1 - fp.beta[i] * fp.beta[i], 0.0));
  lg -= cplx(cp + 1, -nt) * std::log(nd);
  r.value = ScaledComplex::from_log(lg);
  r.range_mismatch = nt > l4;
  return r;
}

cplx laplace_integral(unsigned n, const ContourCurve& curve, double* eps_out, bool* clipped) {
  const double nd = n;
  const double eps = std::log(nd) / std::sqrt(nd);
  if (curve.y_min() > -eps) throw DomainError("laplace_integral: traced curve does not reach -epsilon");
  const double hi = std::min(eps, curve.L());
  if (eps_out) *eps_out = eps;
  if (clipped) *clipped = eps > curve.L();
  special::QuadOptions qo;
  qo.reltol = 1e-10;
  auto f = [&](double y) -> cplx { return std::exp(-nd * y * y) * curve.at(y).dz; };
  auto a = special::integrate_gauss_kronrod(f, -eps, 0.0, qo);
  auto b = special::integrate_gauss_kronrod(f, 0.0, hi, qo);
  return a.value + b.value;
}

AsympResult asymp_global(unsigned n, const ContourCurve& curve, const FloatParams& fp) {
  const double nd = n;
  AsympResult r;
  const cplx lap = laplace_integral(n, curve, &r.eps, &r.eps_clipped);
  const SaddleData& sd = curve.saddle();
  r.value = ScaledComplex::from_log(phi_eval(sd.zeta, curve.t(), fp).log_psi + nd * sd.phi_at + std::log(lap));
  r.range_mismatch = nd * curve.t() <= std::pow(std::log(nd), 4);
  return r;
}

cplx h_exact_scaled(unsigned n, double t, const sheffer::ParamSet& params) {
  const long bits = 256;
  const series::SPoly h = sheffer::gen_h(n, params);
  const series::Rational im = -series::Rational(t) * n;
  series::HPEval v = series::spoly_eval(h, series::ComplexHP(params.c(), im, bits));
  const series::Rational denom = series::Rational(series::factorial(n)) * series::pow(params.alpha()[0], n);
  series::ComplexHP scaled = v.value / series::ComplexHP(denom, series::Rational(0), bits);
  return kPi * scaled.to_complex();
}

ScaledComplex h_recurrence_scaled(unsigned n, double t, const FloatParams& fp) {
  using lcplx = std::complex<long double>;
  const long double nt = (long double)n * t;
  const lcplx s((long double)fp.c(), -nt);
  const lcplx a = (long double)fp.p + s, b = (long double)fp.pstar - s;

  // r_k = [z^k] (1-z)^a (1+z)^b kept as mantissa * exp(scale_k):
  // (k+1) r_{k+1} = (b - a) r_k + (k - 1 - a - b) r_{k-1}.
  std::vector<lcplx> m(n + 1);
  std::vector<long double> e(n + 1, 0);
  m[0] = 1;
  if (n >= 1) m[1] = b - a;
  for (unsigned k = 1; k < n; ++k) {
    const lcplx prev = m[k - 1] * std::exp(e[k - 1] - e[k]);
    lcplx next = ((b - a) * m[k] + ((long double)k - 1 - a - b) * prev) / (long double)(k + 1);
    long double sc = e[k];
    const long double mag = std::abs(next);
    if (mag > 0) {
      sc += std::log(mag);
      next /= mag;
    }
    m[k + 1] = next;
    e[k + 1] = sc;
  }

  // Even-power coefficients of prod (1 - beta_i^2 w)^{p_i}, w = z^2.
  const unsigned half = n / 2;
  std::vector<long double> g(half + 1, 0);
  g[0] = 1;
  for (size_t i = 0; i < fp.beta.size(); ++i) {
    const long double x = (long double)fp.beta[i] * fp.beta[i], ex = fp.pexp[i];
    std::vector<long double> c(half + 1);
    c[0] = 1;
    for (unsigned j = 1; j <= half; ++j) c[j] = c[j - 1] * ((long double)j - 1 - ex) / j * x;
    std::vector<long double> out(half + 1, 0);
    for (unsigned j = 0; j <= half; ++j)
      for (unsigned k = 0; j + k <= half; ++k) out[j + k] += g[j] * c[k];
    g.swap(out);
  }

  const long double top = e[n];
  lcplx acc = 0;
  for (unsigned j = 0; j <= half; ++j) {
    if (g[j] == 0) continue;
    acc += g[j] * m[n - 2 * j] * std::exp(e[n - 2 * j] - top);
  }
  ScaledComplex r{cplx((double)acc.real(), (double)acc.imag()) * kPi, (double)top};
  return r.normalized();
}

ParityReport parity_check(const sheffer::ParamSet& params, const std::vector<unsigned>& ns,
                          const std::vector<double>& ts, double tol) {
  if (ts.empty()) throw DomainError("parity_check: empty t grid");
  const FloatParams fp = FloatParams::from(params);
  ParityReport rep;

  auto sign_of = [](double x) { return x >= 0 ? 1 : -1; };
  const double t0 = ts.front();
  {
    cplx e2 = h_exact_scaled(2, t0, params);
    cplx p2 = p_n_contour(2, t0, fp).value.value();
    rep.even_sign = sign_of(e2.real() * p2.imag());
    cplx e3 = h_exact_scaled(3, t0, params);
    cplx p3 = p_n_contour(3, t0, fp).value.value();
    rep.odd_sign = sign_of(e3.imag() * p3.real());
  }

  rep.all_hold = true;
  for (unsigned n : ns) {
    for (double t : ts) {
      ParityPoint pt;
      pt.n = n;
      pt.t = t;
      pt.exact = h_exact_scaled(n, t, params);
      PnResult pr = p_n_contour(n, t, fp);
      const cplx P = pr.value.value();
      const double den = std::abs(pt.exact) > 0 ? std::abs(pt.exact) : 1.0;
      cplx other;
      if (n % 2 == 0) {
        pt.predicted = double(rep.even_sign) * P.imag();
        other = I * P.real();
      } else {
        pt.predicted = double(rep.odd_sign) * I * P.real();
        other = P.imag();
      }
      pt.rel_error = std::abs(pt.exact - pt.predicted) / den;
      pt.other_branch_rel = std::min(std::abs(pt.exact - other), std::abs(pt.exact + other)) / den;
      pt.contour_error = pr.rel_error;
      pt.holds = pt.rel_error < tol && pr.converged;
      rep.all_hold = rep.all_hold && pt.holds;
      rep.points.push_back(pt);
    }
  }
  return rep;
}

}  // namespace linezero::asymptotics
