#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "linezero/error.hpp"
#include "linezero/sheffer/families.hpp"
#include "linezero/special/gamma_zeta.hpp"
#include "linezero/special/mellin.hpp"
#include "linezero/special/quadrature.hpp"

using namespace linezero;
using namespace linezero::special;
using std::numbers::pi;

namespace {
double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST(Gamma, Values) {
  EXPECT_NEAR(std::abs(gamma_c(1.0) - 1.0), 0, 1e-14);
  EXPECT_NEAR(rel(gamma_c(0.5), std::sqrt(pi)), 0, 1e-14);
  EXPECT_NEAR(std::abs(gamma_c({1, 1})), std::sqrt(pi / std::sinh(pi)), 1e-13);
  EXPECT_NEAR(rel(gamma_c(-0.5), -2 * std::sqrt(pi)), 0, 1e-13);
  EXPECT_NEAR(rel(gamma_c(11.0), 3628800.0), 0, 1e-13);
}

TEST(Gamma, RecurrenceOnGrid) {
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      const cplx s(-4.3 + 1.1 * i, -6.2 + 1.3 * j);
      EXPECT_LT(rel(gamma_c(s + 1.0), s * gamma_c(s)), 1e-12) << s;
    }
}

TEST(Gamma, LogGammaMatchesForLargeArgument) {
  const cplx s(60.5, 3.0);
  EXPECT_LT(std::abs(std::exp(lgamma_c(s) - lgamma_c(s + 1.0)) * s - 1.0), 1e-12);
  EXPECT_NEAR(lgamma_c(101.0).real(), std::lgamma(101.0), 1e-11);
}

TEST(Zeta, Values) {
  EXPECT_NEAR(rel(zeta_c(2.0), pi * pi / 6), 0, 1e-13);
  EXPECT_NEAR(rel(zeta_c(4.0), std::pow(pi, 4) / 90), 0, 1e-13);
  // sum n^-3 with an Euler-Maclaurin tail
  const int N = 2000;
  double z3 = 0;
  for (int n = N; n >= 1; --n) z3 += 1.0 / (double(n) * n * n);
  z3 += 1.0 / (2.0 * N * N) - 1.0 / (2.0 * N * N * N) + 1.0 / (4.0 * std::pow(N, 4));
  EXPECT_NEAR(zeta_c(3.0).real(), z3, 1e-12);
}

TEST(Zeta, FirstNontrivialZero) {
  EXPECT_LT(std::abs(zeta_c({0.5, 14.134725141734693})), 1e-9);
  const cplx s(0.7, 3.0);
  EXPECT_LT(rel(eta_c(s), (1.0 - std::pow(2.0, 1.0 - s)) * zeta_c(s)), 1e-12);
}

TEST(Laguerre, Functions) {
  EXPECT_NEAR(laguerre_fn(0, 0, 2.0), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(laguerre_fn(1, 0, 1.0), 0.0, 1e-15);
  EXPECT_NEAR(laguerre_fn(0, 2, 1.0), std::exp(-0.5), 1e-15);
  const auto L = sheffer::laguerre(7, series::Rational(3, 2));
  for (double x : {0.1, 2.5, 9.0}) EXPECT_NEAR(laguerre_poly(7, 1.5, x), L.eval(cplx(x, 0)).real(), 1e-10);
}

TEST(Quadrature, KnownIntegrals) {
  auto r = integrate_exp_sinh([](double x) { return cplx(std::exp(-x), 0); }, 0);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value.real(), 1.0, 1e-12);
  r = integrate_tanh_sinh([](double x) { return cplx(std::log(x), 0); }, 0, 1);
  EXPECT_NEAR(r.value.real(), -1.0, 1e-12);
  r = integrate_gauss_kronrod([](double x) { return cplx(std::sin(x), std::cos(x)); }, 0, pi);
  EXPECT_NEAR(r.value.real(), 2.0, 1e-12);
  EXPECT_NEAR(r.value.imag(), 0.0, 1e-12);
}

TEST(Mellin, QuadExamples) {
  auto r = mellin_quad([](double x) { return std::exp(-pi * x); }, 2.0);
  EXPECT_NEAR(r.value.real(), 1 / (pi * pi), 1e-12);
  r = mellin_quad([](double x) { return std::exp(-x); }, 1.0);
  EXPECT_NEAR(r.value.real(), 1.0, 1e-12);
  r = mellin_quad([](double x) { return laguerre_fn(0, 0, x); }, 1.0);
  EXPECT_NEAR(r.value.real(), 2.0, 1e-11);
}

TEST(Mellin, ScalingLaw) {
  // int x^lam e^{-a x^b} x^{s-1} dx = a^{-(s+lam)/b} Gamma((s+lam)/b) / b
  for (auto [lam, a, b] : {std::tuple{0.0, pi, 1.0}, {0.0, pi, 2.0}, {1.0, 2.0, 1.0}})
    for (double s : {0.5, 1.5, 3.0}) {
      auto r = mellin_quad([=](double x) { return std::pow(x, lam) * std::exp(-a * std::pow(x, b)); }, s);
      const double want = std::pow(a, -(s + lam) / b) * std::tgamma((s + lam) / b) / b;
      EXPECT_NEAR(r.value.real() / want, 1.0, 1e-9);
    }
}

TEST(Mellin, FamilyExamples) {
  MellinFamily phi;
  phi.p = 0;
  phi.pstar = 1;
  auto pts = verify_mellin_family(phi, {0}, {cplx(2, 0)});
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_NEAR(pts[0].lhs.real(), 1 / (pi * pi), 1e-12);
  EXPECT_LT(pts[0].rel_error, 1e-10);
  pts = verify_mellin_family(phi, {3}, {cplx(2.5, 0)});
  EXPECT_LT(pts[0].rel_error, 1e-8);

  MellinFamily mx;
  mx.mode = MellinMode::meixner;
  mx.b = 1;
  mx.cpar = 2;
  pts = verify_mellin_family(mx, {1}, {cplx(3, 0)});
  // Gamma(3) M_1(-3; 1, 2) with M_1(x) = x/2 + 1
  EXPECT_NEAR(pts[0].rhs.real(), 2 * (-1.5 + 1), 1e-14);
  EXPECT_LT(pts[0].rel_error, 1e-8);

  MellinFamily bump;
  bump.mode = MellinMode::bump;
  bump.alpha = 1;
  for (const auto& pt : verify_mellin_family(bump, {0, 2, 4}, {cplx(1.5, 0), cplx(2, 0.5)})) EXPECT_LT(pt.rel_error, 1e-8);
}

TEST(Mellin, HalvedArgumentConsistency) {
  MellinFamily phi, x2;
  phi.p = x2.p = 0;
  phi.pstar = x2.pstar = 1;
  x2.mode = MellinMode::phi_x2;
  for (unsigned n : {0u, 3u, 6u}) {
    const auto a = verify_mellin_family(x2, {n}, {cplx(5, 0)});
    const auto b = verify_mellin_family(phi, {n}, {cplx(2.5, 0)});
    EXPECT_LT(rel(a[0].lhs, 0.5 * b[0].lhs), 1e-9);
  }
  EXPECT_EQ(parse_mellin_mode("phi_x2"), MellinMode::phi_x2);
  EXPECT_THROW(parse_mellin_mode("bogus"), DomainError);
}

TEST(Theta, PsiStarValues) {
  double direct = 0;
  for (int n = 6; n >= 1; --n) direct += std::exp(-pi * n * n);
  const auto v = psi_star(0, 0, 1, 1.0);
  EXPECT_NEAR(v.value, direct, 1e-15);
  EXPECT_NEAR(v.value, 0.0432174, 1e-7);
  EXPECT_NEAR(psi_star(0, 0, 1, 4.0).value / std::exp(-4 * pi), 1.0, 1e-10);
  EXPECT_LT(psi_star(0, 0, 1, 200.0).value, 1e-200);
}

TEST(Theta, TailBoundMonotone) {
  const PsiStar f(2, 0, 1);
  double prev = f.tail_bound(0.01, 1);
  for (unsigned M = 2; M <= 64; M *= 2) {
    const double b = f.tail_bound(0.01, M);
    EXPECT_LE(b, prev);
    prev = b;
  }
}

TEST(ZetaIdentity, ClosedFormPoints) {
  auto pts = verify_zeta_identity({0}, 0, 1, {4.0, 6.0});
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_NEAR(pts[0].rhs, pi * pi / 90, 1e-14);
  EXPECT_LT(pts[0].rel_error, 1e-6);
  EXPECT_NEAR(pts[1].rhs, std::pow(pi, -3) * 2 * std::pow(pi, 6) / 945, 1e-14);
  EXPECT_LT(pts[1].rel_error, 1e-6);
  pts = verify_zeta_identity({2}, 0, 1, {5.0});
  EXPECT_LT(pts[0].rel_error, 1e-5);
}
