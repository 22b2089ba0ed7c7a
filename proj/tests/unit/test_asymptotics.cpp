#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "linezero/asymptotics/appendix.hpp"
#include "linezero/asymptotics/argument.hpp"
#include "linezero/asymptotics/contour.hpp"
#include "linezero/asymptotics/density.hpp"
#include "linezero/asymptotics/pn.hpp"
#include "linezero/asymptotics/saddle.hpp"
#include "linezero/error.hpp"
#include "linezero/sheffer/families.hpp"
#include "linezero/special/quadrature.hpp"

using namespace linezero;
using namespace linezero::asymptotics;
using std::numbers::pi;

namespace {
const FloatParams kBasic = FloatParams::basic(-1, 0);

// pi h_n(c - i n t) / n! straight from the exact polynomial, in double.
cplx exact_scaled(unsigned n, double t, const series::Rational& p, const series::Rational& ps) {
  const auto q = sheffer::gen_q(n, p, ps);
  const double c = series::Rational((ps - p) / 2).get_d();
  return pi * q.eval(cplx(c, -double(n) * t)) / std::tgamma(n + 1.0);
}
}  // namespace

TEST(Saddle, PointAndDerivatives) {
  for (double t : {0.05, 0.3, 0.7, 0.95}) {
    const auto sd = saddle_point(t);
    EXPECT_NEAR(std::abs(sd.zeta), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(sd.zeta - cplx(std::sqrt(1 - t * t), -t)), 0, 1e-15);
    EXPECT_LT(std::abs(sd.phi_z_at), 1e-12);
    EXPECT_GT(sd.phi_zz_at.real(), 0);
    EXPECT_GT(sd.zeta.real(), 0);
    EXPECT_LT(sd.zeta.imag(), 0);
    // Thales
    EXPECT_NEAR(std::arg(1.0 + sd.zeta) - std::arg(1.0 - sd.zeta), -pi / 2, 1e-14);
  }
  const double r = 1 / std::sqrt(2.0);
  const auto sd = saddle_point(r);
  EXPECT_NEAR(std::abs(sd.zeta - cplx(r, -r)), 0, 1e-15);
  EXPECT_NEAR(sd.phi_zz_at.real(), 1.0, 1e-13);
  EXPECT_NEAR(sd.phi_zz_at.imag(), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(saddle_point(1 - 1e-12).zeta - cplx(0, -1)), 0, 1e-5);
}

TEST(Saddle, PhiOnImaginaryAxis) {
  for (double x : {-0.1, -1.0, -7.0}) EXPECT_NEAR(phi_only(cplx(0, x), 0.4).imag(), pi / 2, 1e-14);
  EXPECT_THROW(phi_eval(cplx(1, 0), 0.3, kBasic), DomainError);
}

TEST(Saddle, DerivativesMatchFiniteDifferences) {
  const double t = 0.37, h = 1e-5;
  for (cplx z : {cplx(0.4, -0.5), cplx(1.3, -0.2), cplx(0.2, 0.6)}) {
    const auto v = phi_eval(z, t, kBasic);
    const cplx d1 = (phi_only(z + h, t) - phi_only(z - h, t)) / (2 * h);
    const cplx d2 = (phi_only(z + h, t) - 2.0 * phi_only(z, t) + phi_only(z - h, t)) / (h * h);
    const cplx d3 = (phi_z_only(z + h, t) - 2.0 * phi_z_only(z, t) + phi_z_only(z - h, t)) / (h * h);
    EXPECT_LT(std::abs(v.phi_z - d1), 1e-8);
    EXPECT_LT(std::abs(v.phi_zz - d2), 1e-4);
    EXPECT_LT(std::abs(v.phi_zzz - d3), 1e-4);
    EXPECT_LT(std::abs(phi_z_only(z, t) - v.phi_z), 1e-14);
  }
}

TEST(Saddle, EnvelopeGradientAndMonotonePhase) {
  const double h = 1e-6;
  double prev = -1e300;
  for (double t = 0.02; t < 0.99; t += 0.01) {
    auto at = [](double s) { return phi_only(saddle_point(s).zeta, s); };
    const cplx fd = (at(t + h) - at(t - h)) / (2 * h);
    EXPECT_LT(std::abs(fd - phi_t_at_saddle(t)), 1e-8) << t;
    const cplx z = saddle_point(t).zeta;
    EXPECT_GT(std::log(std::abs(1.0 + z) / std::abs(1.0 - z)), 0);
    const double im = at(t).imag();
    EXPECT_GT(im, prev);
    prev = im;
  }
}

TEST(Contour, CurveAtPointThree) {
  const ContourCurve c(0.3, 3.0);
  EXPECT_TRUE(c.checks().ok());
  EXPECT_LT(c.checks().max_defect, 1e-10);
  EXPECT_GT(c.L(), 0);
  EXPECT_GT(c.z_L(), 0);
  EXPECT_LT(c.z_L(), 1);
  EXPECT_NEAR(c.y_min(), -3.0, 1e-12);
  const cplx zeta = c.saddle().zeta;
  for (double y : {-2.0, -0.5, -1e-3, 1e-7, 0.1, 0.5 * c.L()}) {
    const auto s = c.at(y);
    EXPECT_NEAR(std::abs(phi_only(s.z, 0.3) - phi_only(zeta, 0.3) + y * y), 0, 1e-10);
    EXPECT_EQ(std::abs(s.z) < 1, y > 0);
    EXPECT_GT(s.dz.imag(), 0);
    EXPECT_EQ(phi_z_only(s.z, 0.3).imag() > 0, y > 0);
  }
  // Re phi decreases up the vertical ray from z(L)
  double prev = 1e300;
  for (double u = 0; u < 5; u += 0.25) {
    const double re = phi_only(cplx(c.z_L(), u), 0.3).real();
    EXPECT_LT(re, prev);
    prev = re;
  }
}

TEST(Contour, ChecksHoldAcrossT) {
  for (double t : {0.1, 0.5, 0.9}) {
    const auto c = trace_curve(t, 2.0);
    EXPECT_TRUE(c.checks().ok()) << t;
    EXPECT_LT(c.checks().max_defect, 1e-10);
  }
}

TEST(Pn, EvenAndOddBranches) {
  const auto r4 = p_n_contour(4, 0.5, kBasic);
  const auto r5 = p_n_contour(5, 0.5, kBasic);
  EXPECT_TRUE(r4.converged && r5.converged);
  const cplx P4 = r4.value.value(), P5 = r5.value.value();
  const cplx E4 = exact_scaled(4, 0.5, -1, 0), E5 = exact_scaled(5, 0.5, -1, 0);
  EXPECT_LT(std::abs(E4.imag()), 1e-12 * std::abs(E4));
  EXPECT_LT(std::abs(E4.real() - P4.imag()), 1e-6 * std::abs(E4));
  EXPECT_LT(std::abs(E5.real()), 1e-12 * std::abs(E5));
  EXPECT_LT(std::abs(E5.imag() + P5.real()), 1e-6 * std::abs(E5));
}

TEST(Pn, ExactRoutesAgree) {
  const auto P = sheffer::ParamSet({1, series::Rational(3, 2)}, {series::Rational(-1, 2)}, -1, 0);
  const auto fp = FloatParams::from(P);
  for (unsigned n : {3u, 8u, 13u})
    for (double t : {0.25, 0.6}) {
      const cplx a = h_exact_scaled(n, t, P);
      const cplx b = h_recurrence_scaled(n, t, fp).value();
      EXPECT_LT(std::abs(a - b), 1e-10 * std::abs(a)) << n << " " << t;
    }
}

TEST(Pn, ParityReport) {
  const auto rep = parity_check(sheffer::ParamSet::basic(-1, 0), {2, 3, 4, 5, 6, 7}, {0.2, 0.8});
  EXPECT_TRUE(rep.all_hold);
  EXPECT_EQ(rep.even_sign, 1);
  EXPECT_EQ(rep.odd_sign, -1);
  for (const auto& pt : rep.points) EXPECT_GT(pt.other_branch_rel, 1e-3);
}

TEST(Asymp, GlobalRatioImproves) {
  auto err = [](unsigned n) {
    const auto pn = p_n_contour(n, 0.5, kBasic);
    const auto af = asymp_formula(n, 0.5, kBasic, AsympMode::global);
    return std::abs(ratio(pn.value, af.value) - 1.0);
  };
  const double e200 = err(200), e800 = err(800);
  EXPECT_GT(e200, e800);
  EXPECT_LT(e800, 0.05);
}

TEST(Asymp, GlobalModulusScaling) {
  const double t = 0.5;
  const double phi = saddle_point(t).phi_at.real();
  auto rem = [&](unsigned n) {
    return asymp_formula(n, t, kBasic, AsympMode::global).value.log_abs() - n * phi + 0.5 * std::log(double(n));
  };
  EXPECT_LT(std::abs(rem(1600) - rem(800)), 1e-2);
}

TEST(Asymp, SmallTAgainstRecurrence) {
  const unsigned n = 10000;
  const double t = 1.0 / n;
  const auto pn = p_n_contour(n, t, kBasic);
  const auto af = asymp_formula(n, t, kBasic, AsympMode::small_t);
  EXPECT_LT(std::abs(ratio(pn.value, af.value) - 1.0), 0.1);
  // n even: pi h_n / (n!) equals Im p_n
  const auto h = h_recurrence_scaled(n, t, kBasic);
  const ScaledComplex im_part{cplx(pn.value.mantissa.imag(), 0), pn.value.log_scale};
  EXPECT_LT(std::abs(ratio(h, im_part) - 1.0), 1e-6);
  EXPECT_EQ(parse_asymp_mode("small-t"), AsympMode::small_t);
}

TEST(Scaled, FromLogAndRatio) {
  const auto a = ScaledComplex::from_log(cplx(800.0, 0.3));
  const auto b = ScaledComplex::from_log(cplx(799.0, 0.1));
  EXPECT_NEAR(a.log_abs(), 800.0, 1e-12);
  EXPECT_LT(std::abs(ratio(a, b) - std::exp(cplx(1.0, 0.2))), 1e-12);
}

TEST(Eta, Cases) {
  EXPECT_DOUBLE_EQ(eta_select(0.5, -1), -pi / 2);
  EXPECT_DOUBLE_EQ(eta_select(0.5, -0.5), 0);
  EXPECT_DOUBLE_EQ(eta_select(1, 0), 0);
}

TEST(ArgTrack, CountsAgree) {
  const auto r = delta_arg_track(100, sheffer::ParamSet::basic(-1, 0));
  EXPECT_TRUE(r.unwrap_ok);
  EXPECT_TRUE(r.within);
  ASSERT_TRUE(r.count_from_roots.has_value());
  EXPECT_LT(std::abs(r.count_from_arg - double(*r.count_from_roots)), 2.0);
  EXPECT_LT(std::abs(r.count_from_density - double(*r.count_from_roots)), 2.0);
  EXPECT_NEAR(r.tracked / 100, pi / 2, 0.2);
}

TEST(ZStar, Table) {
  const auto rows = z_star_check({1e-3, 0.5, 0.999});
  EXPECT_NEAR(rows[1].z_star, 1.2076, 1e-4);
  EXPECT_NEAR(rows[1].ln_z, 0.1886, 1e-4);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.holds);
    EXPECT_GT(r.margin, 0);
    EXPECT_NEAR(r.z_star, r.z_closed, 1e-9 * r.z_closed);
    EXPECT_DOUBLE_EQ(r.z_variant, -1.0);
    EXPECT_LT(std::abs(r.im_residual), 1e-9);
    EXPECT_NEAR(r.re_gap, r.margin, 1e-9);
  }
  EXPECT_THROW(z_star_check({1.0}), DomainError);
}

TEST(Density, Values) {
  EXPECT_DOUBLE_EQ(density_D(1.0), 0.0);
  EXPECT_NEAR(density_D(0.6), std::log(3.0) / pi, 1e-15);
  EXPECT_NEAR(density_D(1 - 1e-12), 0, 1e-5);
  EXPECT_DOUBLE_EQ(density_cdf(0.0), 0.0);
  EXPECT_NEAR(density_cdf(1.0), 0.5, 1e-15);
  const auto q = special::integrate_tanh_sinh([](double x) { return cplx(density_D(x), 0); }, 0, 1, {.reltol = 1e-13});
  EXPECT_NEAR(q.value.real(), 0.5, 1e-9);
  for (double x : {0.1, 0.4, 0.8}) {
    const auto part = special::integrate_tanh_sinh([](double u) { return cplx(density_D(u), 0); }, 0, x);
    EXPECT_NEAR(part.value.real(), density_cdf(x), 1e-10);
  }
  EXPECT_THROW(density_D(0.0), DomainError);
}

TEST(Density, KsOnQuantileSample) {
  // ordinates at the midpoint quantiles of 2 int_0^x D: KS distance is 1/(2m)
  const size_t m = 200;
  std::vector<double> t;
  for (size_t k = 0; k < m; ++k) {
    const double target = (k + 0.5) / m;
    double lo = 0, hi = 1;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (2 * density_cdf(mid) < target ? lo : hi) = mid;
    }
    t.push_back(k % 2 ? 0.5 * (lo + hi) : -0.5 * (lo + hi));
  }
  const auto d = density_from_ordinates(m, t, 20);
  EXPECT_NEAR(d.ks_distance, 0.5 / m, 1e-9);
  EXPECT_EQ(d.outside, 0u);
  EXPECT_NEAR(d.mass, 1.0, 1e-12);
  EXPECT_EQ(std::max_element(d.hist.begin(), d.hist.end()) - d.hist.begin(), 0);
  EXPECT_EQ(density_from_ordinates(3, {0.2, -0.5, 1.5}, 4).outside, 1u);
}

TEST(Density, EmpiricalSmallN) {
  const auto d = empirical_density(60, sheffer::ParamSet::basic(-1, 0), 10);
  EXPECT_EQ(d.zeros, 60u);
  EXPECT_LT(d.ks_distance, 0.1);
  EXPECT_EQ(std::max_element(d.hist.begin(), d.hist.end()) - d.hist.begin(), 0);
  EXPECT_THROW(empirical_density(10, sheffer::ParamSet::basic(0, 1)), DomainError);
}

TEST(Appendix, Formulas) {
  const double l2 = std::log(2.0);
  EXPECT_NEAR(double(g_rs(2, 1)), -25 * (3 - 4 * l2) * (3 + 4 * l2), 1e-12);
  for (long double r : {1.01L, 1.5L, 3.0L, 40.0L}) {
    EXPECT_NEAR(double(g_rs(r, 1) / g_right_closed(r)), 1.0, 1e-12);
    EXPECT_NEAR(double(g_rs(r, 0.5L - 0.5L / (r * r)) / g_left_closed(r)), 1.0, 1e-12);
  }
  for (double t : {0.2, 0.6}) {
    const cplx z = saddle_point(t).zeta;
    EXPECT_NEAR(t_of_uv(z.real(), z.imag()), t, 1e-12);
  }
  const double r = 1 / std::sqrt(2.0);
  EXPECT_NEAR(im_phi_zz_direct(r, -r), 0, 1e-12);
  EXPECT_NEAR(imphi2_poly(r, -r), 0, 1e-12);
  // the direct forms agree with phi_eval on the curve
  const cplx z(0.5, -0.4);
  const auto v = phi_eval(z, t_of_uv(0.5, -0.4), kBasic);
  EXPECT_NEAR(re_phi_zz_direct(0.5, -0.4), v.phi_zz.real(), 1e-12);
}

TEST(Appendix, NelderMeadRosenbrock) {
  const auto r = nelder_mead([](double x, double y) { return (1 - x) * (1 - x) + 100 * (y - x * x) * (y - x * x); },
                             -1.2, 1.0, 0.1);
  EXPECT_NEAR(r.x, 1.0, 1e-6);
  EXPECT_NEAR(r.y, 1.0, 1e-6);
}
