#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "linezero/series/rational.hpp"
#include "linezero/special/quadrature.hpp"

namespace linezero::special {

using series::Rational;

// int_0^inf f(x) x^{s-1} dx on the log axis (exp-sinh substitution).
QuadResult mellin_quad(const std::function<double(double)>& f, cplx s, double reltol = 1e-10);

enum class MellinMode { bump, meixner, phi, phi_x2 };
const char* to_string(MellinMode m);
MellinMode parse_mellin_mode(const std::string& text);

struct MellinFamily {
  MellinMode mode = MellinMode::phi;
  Rational alpha = 0;            // bump
  Rational b = 1, cpar = 2;      // meixner
  Rational p = 0, pstar = 1;     // phi, phi_x2
};

struct MellinPoint {
  unsigned index = 0;
  cplx s;
  cplx lhs, rhs;
  double rel_error = 0;
  double quad_error = 0;
  bool converged = false;
};

// Quadrature of the left-hand side against the closed form, one row per
// (index, s) pair, indices-major.
std::vector<MellinPoint> verify_mellin_family(const MellinFamily& family, const std::vector<unsigned>& indices,
                                              const std::vector<cplx>& s_grid, double reltol = 1e-10);

struct ThetaTail {
  unsigned truncation = 0;  // M: terms n = 1..M summed
  double tail_bound = 0;    // bound on sum_{n > M} |Phi*_j(n sqrt x)|
  bool capped = false;      // M hit the cap before the bound met the tolerance
};

struct ThetaValue {
  double value = 0;
  ThetaTail tail;
};

// psi*_j(x) = sum_{n>=1} Phi_j(2 pi n^2 x).
class PsiStar {
 public:
  PsiStar(unsigned j, const Rational& p, const Rational& pstar);
  ThetaValue operator()(double x, double reltol = 1e-12, unsigned max_terms = 10'000'000) const;
  // Bound on the tail beyond M at x.
  double tail_bound(double x, unsigned M) const;
  // Bound on int_0^{x0} |psi*_j(x)| x^{sigma-1} dx, sigma > 1/2.
  double head_bound(double x0, double sigma) const;

 private:
  unsigned j_;
  std::vector<double> coef_;  // prefactor coefficients of Phi_j
  std::vector<double> absc_;
  double ustar_ = 0, bconst_ = 0, g0_ = 0, g1_ = 0;
  double prefactor(double u) const;
};

ThetaValue psi_star(unsigned j, const Rational& p, const Rational& pstar, double x, double reltol = 1e-12);

struct ZetaPoint {
  unsigned j = 0;
  double s = 0;
  double lhs = 0, rhs = 0;
  double rel_error = 0;
  double quad_error = 0;
  double head_bound = 0;  // dropped piece near x = 0
  double x0 = 0;
  bool converged = false;
};

// int_0^inf psi*_j(x) x^{s/2-1} dx versus q_j(s/2) pi^{-s/2} Gamma(s/2) zeta(s); s > 2.
std::vector<ZetaPoint> verify_zeta_identity(const std::vector<unsigned>& js, const Rational& p, const Rational& pstar,
                                            const std::vector<double>& s_grid, double reltol = 1e-8);

}  // namespace linezero::special
