#pragma once

#include <vector>

#include "linezero/series/spoly.hpp"
#include "linezero/series/zseries.hpp"
#include "linezero/sheffer/params.hpp"

namespace linezero::sheffer {

using series::SPoly;
using series::ZSeries;

// Ordinary coefficients b_0..b_upto of prod_i (1 - beta_i^2 z^2)^{p_i} with
// beta_i = alpha_i / alpha_0.
std::vector<Rational> coeff_b(const ParamSet& params, unsigned upto);

// q_n(s) = n! [z^n] (1 - z)^{p+s} (1 + z)^{p*-s}. Built from the series and
// from the double binomial sum; the two must agree.
SPoly gen_q(unsigned n, const Rational& p, const Rational& pstar);

// q_0..q_nmax via the three-term recurrence, spot-checked against the
// binomial sum at fixed rational points.
std::vector<SPoly> q_table(unsigned nmax, const Rational& p, const Rational& pstar);

// h_n(s) = n! [z^n] of the full generating function, including alpha_0^n.
SPoly gen_h(unsigned n, const ParamSet& params);
std::vector<SPoly> h_table(unsigned nmax, const ParamSet& params);

// (p* - p - 2s) q_n + n (n - p* - p - 1) q_{n-1}
SPoly three_term_next(const SPoly& qn, const SPoly& qnm1, unsigned n, const Rational& p, const Rational& pstar);

// 2 q_{n+1}(s) == (p* - p - 2s) q_n(s) + (p* - s) q_n(s+1) - (p + s) q_n(s-1)
bool shift_recurrence_check(unsigned n, const Rational& p, const Rational& pstar);

// q_n(s) == (-1)^n q_n(p* - p - s)
bool functional_eq_check(unsigned n, const Rational& p, const Rational& pstar);

// n! [z^n] (1 - z/c)^x (1 - z)^{-x-b}, as a polynomial in x.
SPoly meixner(unsigned n, const Rational& b, const Rational& cpar);

// sum_k C(n,k) (p*)_{n-k} M_k(-s; -p, -1)
SPoly q_via_meixner(unsigned n, const Rational& p, const Rational& pstar);

// [z^n] (1 - z)^{-alpha-1} exp(-z x / (1 - z)), as a polynomial in x.
SPoly laguerre(unsigned n, const Rational& alpha);

// Phi_n(s) = prefactor(s) * exp(-s/2).
struct PhiFunction {
  SPoly prefactor;
  double operator()(double s) const;
};
PhiFunction phi_n(unsigned n, const Rational& p, const Rational& pstar);

// P_n^{(alpha)}(s) = q_n(s; p = -1 - alpha/2, p* = -alpha/2) / n!
SPoly bump_P(unsigned n, const Rational& alpha);

// Scalar coefficient n! [z^n] of the generating function at a rational s;
// an evaluation route independent of the polynomial constructions.
Rational h_value_from_series(unsigned n, const ParamSet& params, const Rational& s);

}  // namespace linezero::sheffer
