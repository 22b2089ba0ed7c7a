#include <gtest/gtest.h>

#include "linezero/error.hpp"
#include "linezero/sheffer/families.hpp"
#include "linezero/sheffer/riordan.hpp"

using namespace linezero;
using namespace linezero::sheffer;
using series::factorial;
using series::falling;
using series::parse_rational;

namespace {

SPoly S(std::initializer_list<Rational> c) { return SPoly(c); }

// prod_{j<k} (a0 + a1 s - j) / (j + 1), i.e. C(a0 + a1 s, k) as a polynomial.
SPoly binom_poly(const Rational& a0, const Rational& a1, unsigned k) {
  SPoly r = S({1});
  for (unsigned j = 0; j < k; ++j) r = r * SPoly::linear((a0 - j) / (j + 1), a1 / (j + 1));
  return r;
}

Rational binom_q(const Rational& a, unsigned k) {
  Rational r = 1;
  for (unsigned j = 0; j < k; ++j) r *= (a - j) / Rational(j + 1);
  return r;
}

// n! sum_k C(p+s, k) (-1)^k C(p*-s, n-k)
SPoly q_oracle(unsigned n, const Rational& p, const Rational& ps) {
  SPoly acc;
  for (unsigned k = 0; k <= n; ++k) {
    SPoly term = binom_poly(p, 1, k) * binom_poly(ps, -1, n - k);
    if (k % 2) term = -term;
    acc += term;
  }
  return acc * Rational(factorial(n));
}

// n! [z^n] of the full generating function at a rational s, by scalar series.
Rational h_oracle(unsigned n, const std::vector<Rational>& alpha, const std::vector<Rational>& pexp, const Rational& p,
                  const Rational& ps, const Rational& s) {
  auto mul = [n](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> c(n + 1, 0);
    for (unsigned i = 0; i <= n; ++i)
      for (unsigned j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
    return c;
  };
  std::vector<Rational> g(n + 1), h(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    g[k] = binom_q(p + s, k) * series::pow(-alpha[0], k);
    h[k] = binom_q(ps - s, k) * series::pow(alpha[0], k);
  }
  std::vector<Rational> acc = mul(g, h);
  for (size_t i = 0; i < pexp.size(); ++i) {
    std::vector<Rational> f(n + 1, 0);
    for (unsigned k = 0; 2 * k <= n; ++k) f[2 * k] = binom_q(pexp[i], k) * series::pow(-alpha[i + 1] * alpha[i + 1], k);
    acc = mul(acc, f);
  }
  return acc[n] * Rational(factorial(n));
}

ParamSet P1(const Rational& a1, const Rational& p1, const Rational& p, const Rational& ps) {
  return ParamSet({1, a1}, {p1}, p, ps);
}

}  // namespace

TEST(ParamSet, Validation) {
  EXPECT_THROW(ParamSet({0}, {}, 0, 1), DomainError);
  EXPECT_THROW(ParamSet({1, 1}, {1}, 0, 1), DomainError);
  EXPECT_THROW(ParamSet({2, -3, Rational(5, 2)}, {1, 1}, 0, 1), DomainError);
  EXPECT_THROW(ParamSet({1, 2}, {}, 0, 1), DomainError);
  const ParamSet ok({-1, Rational(3, 2)}, {Rational(1, 2)}, -1, 0);
  EXPECT_EQ(ok.c(), Rational(1, 2));
  EXPECT_EQ(ok.normalized_alpha()[0], Rational(-3, 2));
  try {
    ParamSet({0}, {}, 0, 1);
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("degenerate"), std::string::npos);
  }
}

TEST(CoeffB, Examples) {
  EXPECT_EQ(coeff_b(ParamSet::basic(0, 1), 3), (std::vector<Rational>{1, 0, 0, 0}));
  EXPECT_EQ(coeff_b(P1(2, 1, 0, 1), 2), (std::vector<Rational>{1, 0, -4}));
  EXPECT_EQ(coeff_b(P1(2, Rational(1, 2), 0, 1), 4), (std::vector<Rational>{1, 0, -2, 0, -2}));
}

TEST(CoeffB, OddCoefficientsVanish) {
  const ParamSet P({1, Rational(-5, 3), 4}, {Rational(-1, 2), 3}, -1, 0);
  const auto b = coeff_b(P, 15);
  for (unsigned k = 1; k <= 15; k += 2) EXPECT_EQ(b[k], 0);
  EXPECT_NE(b[2], 0);
}

TEST(GenQ, SmallDegreesP0Pstar1) {
  EXPECT_EQ(gen_q(0, 0, 1), S({1}));
  EXPECT_EQ(gen_q(1, 0, 1), S({1, -2}));
  EXPECT_EQ(gen_q(2, 0, 1), S({0, -4, 4}));
  EXPECT_EQ(gen_q(3, 0, 1), S({0, -4, 12, -8}));
  EXPECT_EQ(gen_q(4, 0, 1), S({0, -16, 32, -32, 16}));
}

TEST(GenQ, DegreesNineAndTenForPMinus1) {
  EXPECT_EQ(gen_q(9, -1, 0),
            S({362880, -1297152, 1884672, -1838080, 919296, -462336, 96768, -30720, 2304, -512}));
  EXPECT_EQ(gen_q(10, -1, 0), S({3628800, -12971520, 21441024, -18380800, 12869120, -4623360, 1892352, -307200,
                                 84480, -5120, 1024}));
}

TEST(GenQ, MatchesBinomialOracle) {
  for (auto [p, ps] : {std::pair{Rational(0), Rational(1)}, {Rational(-1), Rational(0)}, {Rational(1, 3), Rational(-5, 2)},
                       {Rational(7, 4), Rational(2)}})
    for (unsigned n = 0; n <= 12; ++n) {
      const SPoly q = gen_q(n, p, ps);
      EXPECT_EQ(q, q_oracle(n, p, ps)) << "n=" << n;
      EXPECT_EQ(q.degree(), int(n));
      EXPECT_EQ(q.leading(), series::pow(Rational(-2), n));
    }
}

TEST(GenQ, IdentitiesThroughDegree40) {
  const auto table = q_table(41, -1, 0);
  for (unsigned n = 0; n <= 40; ++n) {
    EXPECT_EQ(table[n], gen_q(n, -1, 0));
    EXPECT_EQ(gen_h(n, ParamSet::basic(-1, 0)), table[n]);
    if (n >= 1) EXPECT_EQ(three_term_next(table[n], table[n - 1], n, -1, 0), table[n + 1]);
    EXPECT_TRUE(shift_recurrence_check(n, -1, 0));
    EXPECT_TRUE(functional_eq_check(n, -1, 0));
    EXPECT_EQ(q_via_meixner(n, -1, 0), table[n]);
  }
}

TEST(GenH, Examples) {
  EXPECT_EQ(gen_h(0, P1(2, 1, 0, 1)), S({1}));
  EXPECT_EQ(gen_h(2, ParamSet::basic(0, 1)), S({0, -4, 4}));
  EXPECT_EQ(gen_h(2, P1(2, 1, 0, 1)), S({-8, -4, 4}));
}

TEST(GenH, MatchesScalarSeriesOracle) {
  const std::vector<std::tuple<std::vector<Rational>, std::vector<Rational>, Rational, Rational>> cases{
      {{1, Rational(11, 10)}, {Rational(-1, 2)}, -1, 0},
      {{Rational(-2, 3), 1, Rational(-7, 4)}, {2, Rational(1, 3)}, Rational(1, 2), Rational(-3, 2)},
      {{3}, {}, 0, 1},
  };
  for (const auto& [alpha, pexp, p, ps] : cases) {
    const ParamSet P(alpha, pexp, p, ps);
    for (unsigned n : {1u, 4u, 7u})
      for (const Rational& s : {Rational(0), Rational(2, 5), Rational(-3)})
        EXPECT_EQ(gen_h(n, P).eval(s), h_oracle(n, alpha, pexp, p, ps, s)) << P.describe() << " n=" << n;
  }
}

TEST(GenH, Alpha0Scaling) {
  const ParamSet a({2, 3}, {Rational(1, 2)}, -1, 0), b({1, Rational(3, 2)}, {Rational(1, 2)}, -1, 0);
  for (unsigned n = 0; n <= 8; ++n) EXPECT_EQ(gen_h(n, a), gen_h(n, b) * series::pow(Rational(2), n));
}

TEST(ThreeTerm, Examples) {
  EXPECT_EQ(three_term_next(S({1}), SPoly(), 0, 0, 1), S({1, -2}));
  EXPECT_EQ(three_term_next(S({1, -2}), S({1}), 1, 0, 1), S({0, -4, 4}));
  EXPECT_EQ(three_term_next(S({1, -2}), S({1}), 1, -1, 0), S({1, -2}) * S({1, -2}) + S({1}));
  EXPECT_EQ(gen_q(2, -1, 0), S({2, -4, 4}));
}

TEST(Checks, SmallCases) {
  EXPECT_TRUE(shift_recurrence_check(0, 0, 1));
  EXPECT_TRUE(shift_recurrence_check(1, 0, 1));
  EXPECT_TRUE(shift_recurrence_check(9, -1, 0));
  EXPECT_TRUE(functional_eq_check(0, Rational(5, 3), 2));
  EXPECT_TRUE(functional_eq_check(1, 0, 1));
  EXPECT_TRUE(functional_eq_check(2, 0, 1));
}

TEST(Meixner, MatchesDoubleSum) {
  EXPECT_EQ(meixner(0, 1, 2), S({1}));
  EXPECT_EQ(meixner(1, 1, 2), S({1, Rational(1, 2)}));
  EXPECT_EQ(meixner(1, 1, -1), S({1, 2}));  // b = -p with p = -1
  for (auto [b, c] : {std::pair{Rational(1), Rational(2)}, {Rational(-3, 2), Rational(-1)}, {Rational(5), Rational(1, 3)}})
    for (unsigned n = 0; n <= 8; ++n) {
      SPoly want;
      for (unsigned k = 0; k <= n; ++k) {
        // C(x, k) (-1/c)^k C(-x-b, n-k) (-1)^(n-k)
        SPoly term = binom_poly(0, 1, k) * binom_poly(-b, -1, n - k);
        term *= series::pow(-1 / c, k) * ((n - k) % 2 ? Rational(-1) : Rational(1));
        want += term;
      }
      EXPECT_EQ(meixner(n, b, c), want * Rational(factorial(n))) << "n=" << n;
    }
}

TEST(Meixner, QExpansion) {
  EXPECT_EQ(q_via_meixner(0, 0, 1), S({1}));
  EXPECT_EQ(q_via_meixner(1, 0, 1), S({1, -2}));
  EXPECT_EQ(q_via_meixner(3, -1, 0), gen_q(3, -1, 0));
  for (unsigned n = 0; n <= 10; ++n) EXPECT_EQ(q_via_meixner(n, Rational(2, 3), Rational(-1, 5)), gen_q(n, Rational(2, 3), Rational(-1, 5)));
}

TEST(Laguerre, ExplicitSum) {
  EXPECT_EQ(laguerre(0, 3), S({1}));
  EXPECT_EQ(laguerre(1, Rational(1, 2)), S({Rational(3, 2), -1}));
  EXPECT_EQ(laguerre(2, 0), S({1, -2, Rational(1, 2)}));
  for (const Rational& a : {Rational(0), Rational(-1, 2), Rational(3)})
    for (unsigned n = 0; n <= 9; ++n) {
      std::vector<Rational> c(n + 1);
      for (unsigned k = 0; k <= n; ++k)
        c[k] = binom_q(n + a, n - k) * (k % 2 ? -1 : 1) / Rational(factorial(k));
      EXPECT_EQ(laguerre(n, a), SPoly(c)) << "n=" << n;
    }
}

TEST(PhiN, PrefactorIsUmbralSum) {
  EXPECT_EQ(phi_n(0, 0, 1).prefactor, S({1}));
  EXPECT_EQ(phi_n(1, Rational(1, 3), 2).prefactor, S({Rational(5, 3), -1}));
  for (auto [p, ps] : {std::pair{Rational(0), Rational(1)}, {Rational(-1, 2), Rational(3, 2)}})
    for (unsigned n = 0; n <= 7; ++n) {
      SPoly want;
      for (unsigned k = 0; k <= n; ++k)
        want += laguerre(k, -p - 1) * (Rational(series::binomial(n, k)) * falling(ps, n - k) * Rational(factorial(k)));
      EXPECT_EQ(phi_n(n, p, ps).prefactor, want);
    }
  const auto f = phi_n(1, 0, 1);
  EXPECT_NEAR(f(2.0), -1.0 * std::exp(-1.0), 1e-15);
}

TEST(BumpP, SmallCases) {
  EXPECT_EQ(bump_P(0, 3), S({1}));
  for (const Rational& a : {Rational(0), Rational(2), Rational(-1, 2)}) EXPECT_EQ(bump_P(1, a), S({1, -2}));
  for (unsigned n = 0; n <= 6; ++n)
    EXPECT_EQ(bump_P(n, 4) * Rational(factorial(n)), gen_q(n, -3, -2));
}

TEST(Riordan, Entries) {
  const unsigned N = 8;
  const auto one = ZSeries::one(N), z = ZSeries::identity(N);
  for (unsigned n = 0; n <= 4; ++n)
    for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(riordan_entry(one, z, n, k), n == k ? 1 : 0);
  for (const Rational& ps : {Rational(1), Rational(3, 2)}) {
    const auto g = series::expand_binomial_linear(ps, 0, 1, N);
    const RiordanMatrix M(g, z);
    EXPECT_EQ(M.entry(2, 1), 2 * ps);
    for (unsigned n = 0; n <= N; ++n)
      for (unsigned k = 0; k <= n; ++k)
        EXPECT_EQ(M.entry(n, k), Rational(series::binomial(n, k)) * falling(ps, n - k)) << n << "," << k;
  }
}

TEST(Riordan, FactorizationGivesH) {
  const ParamSet P({1, Rational(-5, 4), 2}, {Rational(1, 2), -1}, -1, Rational(1, 3));
  const unsigned N = 8;
  const auto h = riordan_apply(product_g(P, N), ZSeries::identity(N), q_egf(P, N));
  for (unsigned n = 0; n <= N; ++n) EXPECT_EQ(h[n] * Rational(factorial(n)), gen_h(n, P)) << "n=" << n;
  const auto b = q_egf(P, N);
  EXPECT_EQ(riordan_apply(ZSeries::one(N), ZSeries::identity(N), b), b);
}

TEST(Riordan, ProductActsAsComposition) {
  const unsigned N = 7;
  const auto g = ZSeries::from_scalars(N, {1, 2, Rational(-1, 3)});
  const auto f = ZSeries::from_scalars(N, {0, 1, Rational(1, 2)});
  const auto u = series::expand_binomial_linear(Rational(3, 2), 0, -1, N);
  const auto v = ZSeries::from_scalars(N, {0, 2, 0, 1});
  const auto b = ZSeries::from_scalars(N, {1, -1, 4, 0, Rational(2, 7)});
  const RiordanMatrix A(g, f), B(u, v);
  EXPECT_EQ(A.product(B).apply(b), A.apply(B.apply(b)));
}

TEST(HValue, SeriesRouteAgrees) {
  const ParamSet P({1, 2}, {Rational(-3, 2)}, Rational(1, 2), -1);
  for (unsigned n : {0u, 3u, 6u})
    for (const Rational& s : {Rational(1, 7), Rational(-2)}) EXPECT_EQ(h_value_from_series(n, P, s), gen_h(n, P).eval(s));
}

TEST(Parse, RationalListInput) { EXPECT_EQ(parse_rational("-11/10"), Rational(-11, 10)); }
