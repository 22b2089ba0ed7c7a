#include "linezero/asymptotics/contour.hpp"

#include <algorithm>
#include <cmath>

#include "linezero/error.hpp"

namespace linezero::asymptotics {

namespace {
const cplx I{0, 1};

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;
}  // namespace

ContourCurve::ContourCurve(double t, double y_neg_max, const TraceOptions& opt)
    : t_(t), ymax_(y_neg_max), opt_(opt), saddle_(saddle_point(t)) {
  if (!(y_neg_max > 0)) throw DomainError("trace_curve: y_neg_max must be positive");
  const cplx p2 = saddle_.phi_zz_at, p3 = saddle_.phi_zzz_at;
  a1_ = std::sqrt(2.0) * I / std::sqrt(p2);
  a2_ = p3 / (3.0 * p2 * p2);

  trace_side(-1);
  std::reverse(samples_.begin(), samples_.end());
  samples_.push_back({0.0, saddle_.zeta, a1_, 2.0 * a2_});
  trace_side(+1);
  audit();
}

cplx ContourCurve::project(cplx z, double y) const {
  const cplx target = saddle_.phi_at - y * y;
  for (int it = 0; it < 12; ++it) {
    cplx dz = (phi_only(z, t_) - target) / phi_z_only(z, t_);
    z -= dz;
    if (std::abs(dz) <= 1e-15 * std::max(std::abs(z), 1e-3)) break;
  }
  return z;
}

CurveSample ContourCurve::make_sample(double y, cplx z) const {
  CurveSample s;
  s.y = y;
  s.z = z;
  const PhiValues v = phi_eval(z, t_, FloatParams{});
  s.dz = -2.0 * y / v.phi_z;
  s.d2z = (-2.0 - v.phi_zz * s.dz * s.dz) / v.phi_z;
  return s;
}

void ContourCurve::trace_side(double dir) {
  auto f = [this](double y, cplx z) { return -2.0 * y / phi_z_only(z, t_); };

  double y = dir * opt_.seed_y;
  cplx z = project(saddle_.zeta + a1_ * y + a2_ * y * y, y);
  samples_.push_back(make_sample(y, z));

  double h = std::min(opt_.h_max, 1e-3);
  size_t steps = 0;
  while (true) {
    if (dir < 0 && y <= -ymax_) break;
    if (++steps > opt_.max_steps) throw ConvergenceError("trace_curve: step budget exhausted");
    if (h < 1e-14) throw ConvergenceError("trace_curve: step size underflow at y = " + std::to_string(y));
    double hs = dir * h;
    if (dir < 0 && y + hs < -ymax_) hs = -ymax_ - y;

    const cplx k1 = f(y, z);
    const cplx k2 = f(y + c2 * hs, z + hs * (a21 * k1));
    const cplx k3 = f(y + c3 * hs, z + hs * (a31 * k1 + a32 * k2));
    const cplx k4 = f(y + c4 * hs, z + hs * (a41 * k1 + a42 * k2 + a43 * k3));
    const cplx k5 = f(y + c5 * hs, z + hs * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const cplx k6 = f(y + hs, z + hs * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const cplx z5 = z + hs * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const cplx k7 = f(y + hs, z5);
    const cplx err = hs * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    const double scale = opt_.atol + opt_.rtol * std::max(std::abs(z), std::abs(z5));
    const double ratio = std::abs(err) / scale;
    if (!(ratio <= 1)) {
      h *= std::max(0.2, 0.9 * std::pow(ratio, -0.2));
      continue;
    }

    const double ynew = y + hs;
    const cplx znew = project(z5, ynew);

    if (dir > 0 && znew.imag() >= 0) {
      // Bisect the real-axis crossing inside this step.
      const CurveSample base = samples_.back();
      auto at_base = [&](double yy) {
        double d = yy - base.y;
        return project(base.z + base.dz * d + 0.5 * base.d2z * d * d, yy);
      };
      double lo = y, hi = ynew;
      for (int it = 0; it < 80 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
        double mid = 0.5 * (lo + hi);
        (at_base(mid).imag() < 0 ? lo : hi) = mid;
      }
      L_ = hi;
      cplx zl = at_base(hi);
      if (std::abs(zl.imag()) > 1e-9) throw ConvergenceError("trace_curve: real-axis crossing not resolved");
      zL_ = zl.real();
      if (!(zL_ > 0 && zL_ < 1)) throw CrossCheckError("trace_curve: z(L) = " + std::to_string(zL_) + " outside (0,1)");
      samples_.push_back(make_sample(L_, cplx(zL_, 0.0)));
      return;
    }

    y = ynew;
    z = znew;
    samples_.push_back(make_sample(y, z));
    h = std::min(opt_.h_max, h * std::min(5.0, 0.9 * std::pow(std::max(ratio, 1e-10), -0.2)));
  }
}

CurveSample ContourCurve::at(double y) const {
  if (y < -ymax_ - 1e-12 || y > L_ + 1e-12) throw DomainError("ContourCurve::at: y outside traced range");
  if (std::abs(y) < opt_.series_y) {
    return {y, saddle_.zeta + a1_ * y + a2_ * y * y, a1_ + 2.0 * a2_ * y, 2.0 * a2_};
  }
  auto it = std::lower_bound(samples_.begin(), samples_.end(), y,
                             [](const CurveSample& s, double v) { return s.y < v; });
  const CurveSample* near;
  if (it == samples_.end()) {
    near = &samples_.back();
  } else if (it == samples_.begin()) {
    near = &*it;
  } else {
    near = (y - std::prev(it)->y < it->y - y) ? &*std::prev(it) : &*it;
  }
  const double d = y - near->y;
  cplx z = project(near->z + near->dz * d + 0.5 * near->d2z * d * d, y);
  CurveSample s;
  s.y = y;
  s.z = z;
  s.dz = -2.0 * y / phi_z_only(z, t_);
  return s;
}

void ContourCurve::audit() {
  constexpr double slack = 1e-12;
  checks_ = {};
  for (const auto& s : samples_) {
    ++checks_.samples;
    checks_.max_defect =
        std::max(checks_.max_defect, std::abs(phi_only(s.z, t_) - saddle_.phi_at + s.y * s.y));
    if (s.y == 0) continue;
    if (s.z.real() < -slack || s.z.imag() > slack) ++checks_.outside_quadrant;
    if (!(s.dz.imag() > 0)) ++checks_.im_dz_nonpositive;
    const double ip = phi_z_only(s.z, t_).imag();
    if ((s.y > 0) != (ip > 0) || ip == 0) ++checks_.sign_mismatch;
    const double r = std::abs(s.z);
    if ((s.y > 0 && r >= 1) || (s.y < 0 && r <= 1)) ++checks_.modulus_wrong_side;
  }
  if (checks_.max_defect > opt_.defect_tol)
    throw ConvergenceError("trace_curve: level-set defect " + std::to_string(checks_.max_defect) + " exceeds tolerance");
}

ContourCurve trace_curve(double t, double y_neg_max, const TraceOptions& opt) {
  return ContourCurve(t, y_neg_max, opt);
}

}  // namespace linezero::asymptotics
