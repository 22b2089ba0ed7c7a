#include "linezero/asymptotics/argument.hpp"

#include <cmath>
#include <numbers>

#include "linezero/asymptotics/density.hpp"
#include "linezero/asymptotics/pn.hpp"
#include "linezero/error.hpp"
#include "linezero/roots/aberth.hpp"
#include "linezero/sheffer/families.hpp"

namespace linezero::asymptotics {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kAngleTol = 1e-12;
}  // namespace

double eta_angle(double c, double p) {
  double a = std::remainder((c + p + 0.5) * kPi, 2 * kPi);  // [-pi, pi]
  if (a <= -kPi + kAngleTol) a += 2 * kPi;
  return a;
}

double eta_select(double c, double p) {
  if (c + p < 0) return -kPi / 2;
  const double a = eta_angle(c, p);
  if (std::abs(std::abs(a) - kPi / 2) < kAngleTol) return 0;
  if (a > -kPi / 2 && a < kPi / 2) return -a;
  if (a < -kPi / 2) return -a - kPi;
  return -a + kPi;
}

ArgTrack delta_arg_track(unsigned n, const FloatParams& fp, const ArgTrackOptions& opt) {
  if (!(opt.tau > 0 && opt.tau < opt.t_max && opt.t_max < 1)) throw DomainError("delta_arg_track: need 0 < tau < t_max < 1");
  if (opt.steps < 2) throw DomainError("delta_arg_track: need at least 2 grid steps");
  const double nd = n, tau = opt.tau;
  ArgTrack r;
  r.n = n;
  r.tau = tau;
  r.t_max = opt.t_max;

  // psi and phi parts are continuous in t through the principal logs, so the
  // change is an endpoint difference; t = 1 is the limit zeta = -i.
  const PhiValues v0 = phi_eval(saddle_point(tau).zeta, tau, fp);
  const PhiValues v1 = phi_eval({0.0, -1.0}, 1.0, fp);
  r.psi_part = v1.log_psi.imag() - v0.log_psi.imag();
  r.phi_part = nd * (v1.phi.imag() - v0.phi.imag());

  const double ext = std::max(default_y_neg_max(n, fp), std::log(nd) / std::sqrt(nd));
  auto laplace_arg = [&](double t) {
    ContourCurve curve(t, ext);
    cplx I = laplace_integral(n, curve);
    if (I.imag() < 0) r.laplace_upper = false;
    return std::arg(I);
  };

  unsigned steps = opt.steps;
  for (unsigned refine = 0; refine <= opt.max_refine; ++refine, steps *= 2) {
    r.laplace_upper = true;
    double prev = laplace_arg(tau), total = 0;
    bool ok = true;
    for (unsigned k = 1; k <= steps; ++k) {
      const double t = tau + (opt.t_max - tau) * k / steps;
      const double a = laplace_arg(t);
      double d = std::remainder(a - prev, 2 * kPi);
      // The psi/phi phase is smooth; only the Laplace factor needs unwrapping,
      // and together the per-step change must stay below pi/2.
      const double t0 = tau + (opt.t_max - tau) * (k - 1) / steps;
      const double smooth = nd * (phi_eval(saddle_point(t).zeta, t, fp).phi.imag() -
                                  phi_eval(saddle_point(t0).zeta, t0, fp).phi.imag());
      if (std::abs(d) >= kPi / 2 || std::abs(smooth + d) >= kPi / 2) ok = false;
      total += d;
      prev = a;
    }
    r.grid_points = steps + 1;
    r.laplace_part = total;
    r.unwrap_ok = ok;
    if (ok) break;
  }

  r.tracked = r.psi_part + r.phi_part + r.laplace_part;
  const double p = fp.p, c = fp.c();
  r.predicted = nd * kPi / 2 + nd * tau * std::log(tau) - nd * (std::numbers::ln2 + 1) * tau + kPi * (1 - p - c) / 2;
  r.tolerance = kPi + 2 * (nd * tau * tau + tau);
  r.within = std::abs(r.tracked - r.predicted) <= r.tolerance;

  r.eta = eta_select(c, p);
  r.full_prediction = nd * kPi / 2 + kPi * (1 - p - c) / 2 - std::abs(c + p) * kPi / 2 - kPi / 4 - r.eta;

  r.count_from_arg = r.tracked / kPi;
  r.count_from_density = nd * (0.5 - density_cdf(tau));
  return r;
}

ArgTrack delta_arg_track(unsigned n, const sheffer::ParamSet& params, const ArgTrackOptions& opt) {
  ArgTrack r = delta_arg_track(n, FloatParams::from(params), opt);
  if (params.p() + params.pstar() <= 0) {
    roots::RootReport rep = roots::find_roots_stable(sheffer::gen_h(n, params), 0, params.c());
    size_t count = 0;
    for (const auto& z : rep.roots) {
      const double t = -z.imag().to_double() / n;
      if (t >= opt.tau && t < 1) ++count;
    }
    r.count_from_roots = count;
  }
  return r;
}

std::vector<ZStarRow> z_star_check(const std::vector<double>& t_grid) {
  std::vector<ZStarRow> out;
  for (double t : t_grid) {
    if (!(t > 0 && t < 1)) throw DomainError("z_star_check: t must lie in (0,1)");
    ZStarRow row;
    row.t = t;
    const double sq = std::sqrt((1 - t) * (1 + t));
    const double A = std::sqrt((1 - sq) / (1 + sq));
    const double X = std::asin(t) / t;
    // ln((1+z)/(z-1) A) = X is strictly decreasing in z > 1; bisect on w = ln(z-1).
    auto f = [&](double w) {
      const double zm1 = std::exp(w);
      return std::log((2 + zm1) / zm1 * A) - X;
    };
    double lo = -60, hi = 1;
    while (f(hi) > 0) hi += 2;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
      const double mid = 0.5 * (lo + hi);
      (f(mid) > 0 ? lo : hi) = mid;
    }
    row.z_star = 1 + std::exp(0.5 * (lo + hi));
    const double eX = std::exp(X);
    row.z_closed = (eX + A) / (eX - A);
    row.z_variant = (-A + eX) / (A - eX);
    row.ln_z = std::log(row.z_star);
    row.margin = t * kPi / 2 - row.ln_z;

    // Evaluate on the lower lip of the cut [1, inf), the side the curve approaches from.
    const cplx zs(row.z_star, -0.0);
    const cplx gap = phi_only(zs, t) - phi_only(saddle_point(t).zeta, t);
    row.im_residual = gap.imag();
    row.re_gap = gap.real();
    row.holds = row.margin > 0;
    out.push_back(row);
  }
  return out;
}

}  // namespace linezero::asymptotics
