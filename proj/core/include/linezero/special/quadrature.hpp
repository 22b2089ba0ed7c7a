#pragma once

#include <complex>
#include <cstddef>
#include <functional>

namespace linezero::special {

using cplx = std::complex<double>;
using Integrand = std::function<cplx(double)>;

struct QuadResult {
  cplx value{};
  // |I(h) - I(2h)| for the double-exponential rules; Kronrod-Gauss difference
  // summed over panels for the adaptive rule.
  double abs_error_estimate = 0;
  size_t evaluations = 0;
  int levels = 0;
  bool converged = false;
};

struct QuadOptions {
  double reltol = 1e-10;
  double abstol = 0;
  size_t max_evaluations = 2'000'000;
  int max_levels = 14;
};

// [a, inf) with x = a + exp(pi/2 sinh tau).
QuadResult integrate_exp_sinh(const Integrand& f, double a, const QuadOptions& opt = {});
// [a, b] with x = (a+b)/2 + (b-a)/2 tanh(pi/2 sinh tau); endpoint singularities allowed.
QuadResult integrate_tanh_sinh(const Integrand& f, double a, double b, const QuadOptions& opt = {});
// Adaptive Gauss-Kronrod 7/15 on [a, b].
QuadResult integrate_gauss_kronrod(const Integrand& f, double a, double b, const QuadOptions& opt = {});

}  // namespace linezero::special
