#pragma once

#include <complex>

#include "linezero/series/rational.hpp"

namespace linezero::special {

using cplx = std::complex<double>;

// Lanczos (g = 7, 9 terms) with reflection for Re(s) < 1/2.
cplx gamma_c(cplx s);
// Principal-branch-free log Gamma: continuous in s off the negative real axis,
// suitable for ratios of large Gamma values.
cplx lgamma_c(cplx s);

// Riemann zeta for Re(s) > 0, s != 1, through the Dirichlet eta series with
// Borwein's acceleration. The number of terms is chosen from |Im s|.
cplx zeta_c(cplx s);
cplx eta_c(cplx s);

// x^{alpha/2} e^{-x/2} L_n^{(alpha)}(x), with L_n from the three-term recurrence.
double laguerre_fn(unsigned n, const series::Rational& alpha, double x);
// L_n^{(alpha)}(x) alone.
double laguerre_poly(unsigned n, double alpha, double x);

}  // namespace linezero::special
