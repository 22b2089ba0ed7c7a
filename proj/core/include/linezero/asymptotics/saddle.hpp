#pragma once

#include <complex>
#include <string>
#include <vector>

#include "linezero/sheffer/params.hpp"

namespace linezero::asymptotics {

using cplx = std::complex<double>;

// Floating view of a parameter family after z -> z/alpha_0. Irrational alpha_i
// can be supplied directly here; the exact ParamSet is only needed for oracles.
struct FloatParams {
  double p = -1, pstar = 0;
  double alpha0 = 1;
  std::vector<double> beta;  // alpha_i / alpha_0, i = 1..N
  std::vector<double> pexp;

  double c() const { return (pstar - p) / 2; }
  double p0() const { return p + c(); }  // exponent of (1 - z^2)
  // Sum of the (1 - z^2) and (1 - beta^2 z^2) exponents, i.e. psi ~ z^{2*growth - 1} at infinity.
  double growth() const;

  static FloatParams from(const sheffer::ParamSet& params);
  static FloatParams basic(double p, double pstar);
};

struct PhiValues {
  cplx phi, phi_z, phi_zz, phi_zzz;
  cplx log_psi;  // principal-branch log of psi; psi itself overflows too easily
  cplx psi() const { return std::exp(log_psi); }
};

// phi(z,t) = it Log(1+z) - it Log(1-z) - Log z and its z-derivatives, plus psi(z).
// Throws DomainError within 1e-14 of 0 or +-1.
PhiValues phi_eval(cplx z, double t, const FloatParams& fp);
// The same without psi (the contour geometry does not depend on the family).
cplx phi_only(cplx z, double t);
cplx phi_z_only(cplx z, double t);

struct SaddleData {
  double t = 0;
  cplx zeta;
  cplx phi_at, phi_z_at, phi_zz_at, phi_zzz_at;
};

// zeta = -it + sqrt(1 - t^2). Checks |zeta| = 1, |phi_z| < 1e-12, Re phi_zz > 0.
SaddleData saddle_point(double t);

// d/dt phi(zeta(t), t) = i (Log(1+zeta) - Log(1-zeta)) by the envelope property.
cplx phi_t_at_saddle(double t);

}  // namespace linezero::asymptotics
