#include "linezero/asymptotics/appendix.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "linezero/asymptotics/contour.hpp"

namespace linezero::asymptotics {

namespace {
constexpr double kPi = std::numbers::pi;

cplx phi_zz_at(double u, double v) {
  const cplx z(u, v), I(0, 1);
  const double t = t_of_uv(u, v);
  return 1.0 / (z * z) + I * t / ((1.0 - z) * (1.0 - z)) - I * t / ((1.0 + z) * (1.0 + z));
}

struct Problem {
  std::function<double(double, double)> constraint;
  std::string name, source;
};

// Constraint value divided by its gradient norm, so the penalty measures distance.
double scaled(const std::function<double(double, double)>& c, double u, double v) {
  const double h = 1e-7;
  const double gu = (c(u + h, v) - c(u - h, v)) / (2 * h);
  const double gv = (c(u, v + h) - c(u, v - h)) / (2 * h);
  return c(u, v) / std::max(std::hypot(gu, gv), 1e-12);
}

// Quarter disk with 0 <= t <= 1, keeping away from the origin (t is 0/0), -i
// (the coalesced saddle at t = 1) and the pole of phi_zz at 1.
double domain_violation(double u, double v) {
  double d = 0;
  auto pos = [](double x) { return x > 0 ? x : 0; };
  const double r = std::hypot(u, v);
  d += pos(-u) + pos(v) + pos(r - 1) + pos(0.01 - r) + pos(1e-3 - std::hypot(u, v + 1)) +
       pos(1e-3 - std::hypot(u - 1, v));
  const double t = t_of_uv(u, v);
  if (!std::isfinite(t)) return 1e6;
  d += pos(-t) + pos(t - 1);
  return d;
}

Extremum extremize(const Problem& pb, bool minimize, unsigned starts) {
  Extremum best;
  best.constraint = pb.name;
  best.source = pb.source;
  best.sense = minimize ? "min" : "max";
  const double sign = minimize ? 1 : -1;
  double best_t = minimize ? 2 : -1;

  for (unsigned i = 0; i < starts; ++i) {
    for (unsigned j = 0; j < starts; ++j) {
      const double rad = 0.1 + 0.85 * (i + 0.5) / starts;
      const double th = -kPi / 2 * (j + 0.5) / starts;
      double u = rad * std::cos(th), v = rad * std::sin(th);
      for (double mu : {1e2, 1e4, 1e6, 1e8, 1e10}) {
        auto obj = [&](double x, double y) {
          const double dv = domain_violation(x, y);
          if (dv >= 1e6) return 1e30;
          const double c = scaled(pb.constraint, x, y);
          return sign * t_of_uv(x, y) + mu * c * c + 1e3 * mu * dv * dv;
        };
        NMResult r = nelder_mead(obj, u, v, mu < 1e3 ? 0.05 : 1e-3);
        u = r.x;
        v = r.y;
      }
      if (domain_violation(u, v) > 1e-9) continue;
      // A pole also has a small scaled value; insist on a genuine zero.
      const double res = std::abs(scaled(pb.constraint, u, v));
      if (res > 1e-7 || std::abs(pb.constraint(u, v)) > 1e-6) continue;
      const double t = t_of_uv(u, v);
      if ((minimize && t < best_t) || (!minimize && t > best_t)) {
        best_t = t;
        best.t = t;
        best.u = u;
        best.v = v;
        best.constraint_residual = res;
        best.found = true;
      }
    }
  }
  return best;
}
}  // namespace

long double g_rs(long double r, long double s, bool single_power) {
  const long double l = std::log(r), r2 = r * r;
  const long double a = 1 - r2 * (1 - 2 * s);
  const long double w = r2 - 1;
  return 4 * l * l * a * a * r2 - s * (single_power ? w : w * w) * (r2 * r2 + 1 - 2 * r2 * (1 - 2 * s));
}

long double g_right_closed(long double r) {
  const long double r2 = r * r, l = std::log(r);
  return -(r2 + 1) * (r2 + 1) * (r2 - 2 * r * l - 1) * (r2 + 2 * r * l - 1);
}

long double g_left_closed(long double r) {
  const long double a = (r - 1) * (r - 1), b = (r + 1) * (r + 1);
  return -(a * a) * (b * b) * (r * r + 1) / (2 * r * r);
}

double t_of_uv(double u, double v) {
  const double u2 = u * u, v2 = v * v;
  const double num = u2 * u2 * v + 2 * u2 * v2 * v - 2 * u2 * v + v2 * v2 * v + 2 * v2 * v + v;
  const double den = 2 * (u2 * u2 - u2 - v2 * v2 - v2);
  return num / den;
}

double imphi2_poly(double u, double v) {
  const double u2 = u * u, v2 = v * v, u4 = u2 * u2, v4 = v2 * v2;
  return 2 * u4 * v2 - u4 + 4 * u2 * v4 + 6 * u2 * v2 + 2 * u2 + 2 * v4 * v2 - v4 - 4 * v2 - 1;
}

double rephi2_poly(double u, double v) {
  const double u2 = u * u, v2 = v * v, u4 = u2 * u2, v4 = v2 * v2, u6 = u4 * u2, v6 = v4 * v2;
  return -u4 * u4 - 6 * u6 * v2 + 3 * u6 - 8 * u4 * v4 - u4 * v2 - 3 * u4 - 2 * u2 * v6 + 13 * u2 * v4 + 8 * u2 * v2 +
         u2 + v6 - v4 - v2 + v;
}

double im_phi_zz_direct(double u, double v) { return phi_zz_at(u, v).imag(); }
double re_phi_zz_direct(double u, double v) { return phi_zz_at(u, v).real(); }

NMResult nelder_mead(const std::function<double(double, double)>& f, double x0, double y0, double step, double tol,
                     unsigned max_iter) {
  struct P {
    double x, y, f;
  };
  std::array<P, 3> s{P{x0, y0, f(x0, y0)}, P{x0 + step, y0, f(x0 + step, y0)}, P{x0, y0 + step, f(x0, y0 + step)}};
  NMResult out;
  for (unsigned it = 0; it < max_iter; ++it) {
    std::sort(s.begin(), s.end(), [](const P& a, const P& b) { return a.f < b.f; });
    out.iterations = it;
    const double spread = std::abs(s[2].f - s[0].f);
    const double size = std::max(std::hypot(s[1].x - s[0].x, s[1].y - s[0].y), std::hypot(s[2].x - s[0].x, s[2].y - s[0].y));
    if (spread <= tol * (std::abs(s[0].f) + tol) && size < 1e-13) break;
    if (size < 1e-16) break;
    const double cx = (s[0].x + s[1].x) / 2, cy = (s[0].y + s[1].y) / 2;
    auto at = [&](double k) {
      const double x = cx + k * (s[2].x - cx), y = cy + k * (s[2].y - cy);
      return P{x, y, f(x, y)};
    };
    P r = at(-1);
    if (r.f < s[0].f) {
      P e = at(-2);
      s[2] = e.f < r.f ? e : r;
    } else if (r.f < s[1].f) {
      s[2] = r;
    } else {
      P c = r.f < s[2].f ? at(-0.5) : at(0.5);
      if (c.f < std::min(r.f, s[2].f)) {
        s[2] = c;
      } else {
        for (int k = 1; k < 3; ++k) {
          s[k].x = s[0].x + 0.5 * (s[k].x - s[0].x);
          s[k].y = s[0].y + 0.5 * (s[k].y - s[0].y);
          s[k].f = f(s[k].x, s[k].y);
        }
      }
    }
  }
  std::sort(s.begin(), s.end(), [](const P& a, const P& b) { return a.f < b.f; });
  out.x = s[0].x;
  out.y = s[0].y;
  out.f = s[0].f;
  return out;
}

AppendixReport appendix_audit(const AuditGrid& grid) {
  AppendixReport rep;

  // (a) sign of g on the log grid in r - 1 and a uniform grid in s.
  const long double lmin = std::log(grid.r_min_offset), lmax = std::log(grid.r_max - 1);
  for (unsigned i = 0; i < grid.r_points; ++i) {
    const long double r = 1 + std::exp(lmin + (lmax - lmin) * i / (grid.r_points - 1));
    const long double s0 = 0.5L - 0.5L / (r * r);
    const long double scale = std::abs(g_left_closed(r)) + std::abs(g_right_closed(r));
    for (unsigned j = 0; j < grid.s_points; ++j) {
      const long double s = s0 + (1 - s0) * j / (grid.s_points - 1);
      const long double g = g_rs(r, s);
      ++rep.g_points;
      rep.g_max = std::max(rep.g_max, double(g / scale));
      if (g >= 0) {
        if (rep.g_counterexamples++ == 0) {
          rep.first_counter_r = double(r);
          rep.first_counter_s = double(s);
        }
      }
      if (g_rs(r, s, true) >= 0) {
        if (rep.g_single_power_nonnegative++ == 0) {
          rep.single_power_example_r = double(r);
          rep.single_power_example_s = double(s);
        }
      }
    }
    // (b) the two boundary closed forms.
    const long double gr = g_rs(r, 1), gl = g_rs(r, s0);
    rep.right_closed_rel_err = std::max(rep.right_closed_rel_err, double(std::abs(gr - g_right_closed(r)) / scale));
    rep.left_closed_rel_err = std::max(rep.left_closed_rel_err, double(std::abs(gl - g_left_closed(r)) / scale));
  }
  rep.g_2_1 = double(g_rs(2, 1));

  // (c) constrained extrema of t.
  const std::vector<Problem> problems{
      {imphi2_poly, "Im phi_zz = 0", "polynomial form"},
      {im_phi_zz_direct, "Im phi_zz = 0", "direct"},
      {rephi2_poly, "Re phi_zz = 0", "polynomial form"},
      {re_phi_zz_direct, "Re phi_zz = 0", "direct"},
  };
  for (const auto& pb : problems) {
    rep.extrema.push_back(extremize(pb, true, grid.starts));
    rep.extrema.push_back(extremize(pb, false, grid.starts));
  }

  // (d) Im phi_z bounds and Im z' > 0 along traced curves.
  for (double t : grid.t_curves) {
    ContourCurve curve(t, grid.curve_y_neg);
    BoundRow row;
    row.t = t;
    row.L = curve.L();
    row.z_L = curve.z_L();
    row.im_dz_nonpositive = curve.checks().im_dz_nonpositive;
    row.sign_mismatch = curve.checks().sign_mismatch;
    for (const auto& s : curve.samples()) {
      if (s.y >= 0) continue;
      ++row.samples;
      const double ip = phi_z_only(s.z, t).imag();
      const double inv = (1.0 / s.z).imag();
      const double a = -0.5 * inv;
      const double b = -s.y * s.y / (4 * t * (std::norm(s.z) - 1)) * inv;
      const double slack = 1e-12 * std::abs(ip);
      if (ip > std::min(a, b) + slack) ++row.min_form_violations;
      if (ip > std::max(a, b) + slack) ++row.max_form_violations;
    }
    rep.im_dz_failures += row.im_dz_nonpositive;
    rep.bounds.push_back(row);
  }
  return rep;
}

}  // namespace linezero::asymptotics
