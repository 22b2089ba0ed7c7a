#pragma once

#include <string>
#include <vector>

#include "linezero/asymptotics/contour.hpp"
#include "linezero/sheffer/params.hpp"

namespace linezero::asymptotics {

// mantissa * exp(log_scale); p_n(t) grows like exp(n pi t / 2).
struct ScaledComplex {
  cplx mantissa;
  double log_scale = 0;

  static ScaledComplex from_log(cplx log_value);
  cplx value() const;  // may overflow
  double log_abs() const;
  double arg() const { return std::arg(mantissa); }
  ScaledComplex normalized() const;
};
cplx ratio(const ScaledComplex& a, const ScaledComplex& b);

struct PnOptions {
  double reltol = 1e-11;
  TraceOptions trace;
};

struct PnResult {
  ScaledComplex value;
  double rel_error = 0;      // quadrature error estimate relative to |p_n|
  double L = 0, z_L = 0;
  double y_neg_max = 0;
  double curve_part = 0;     // |curve integral| / |total|
  bool converged = false;
  bool cut_warning = false;  // z(L) lies on a branch cut of some (1 - beta_i^2 z^2)^{p_i}
  size_t evaluations = 0;
};

// Negative-side truncation: the integrand decays like exp(-(n - 2 growth) y^2).
double default_y_neg_max(unsigned n, const FloatParams& fp);

// p_n(t) = int over the deformed Hankel contour of psi(z) e^{n phi(z,t)} dz:
// the steepest-descent curve from y = -Ymax up to its real-axis crossing, then
// the vertical ray z(L) + iu.
PnResult p_n_contour(unsigned n, double t, const FloatParams& fp, const PnOptions& opt = {});
PnResult p_n_contour(unsigned n, const ContourCurve& curve, const FloatParams& fp, const PnOptions& opt = {});

enum class AsympMode { small_t, global };
const char* to_string(AsympMode m);
AsympMode parse_asymp_mode(const std::string& text);

struct AsympResult {
  ScaledComplex value;
  bool range_mismatch = false;  // (n, t) outside the range the formula is proved for
  bool eps_clipped = false;     // global mode: epsilon exceeded L
  double eps = 0;
};

// int_{-eps}^{min(eps, L)} e^{-n y^2} z'(y) dy, eps = ln n / sqrt n.
cplx laplace_integral(unsigned n, const ContourCurve& curve, double* eps = nullptr, bool* clipped = nullptr);

AsympResult asymp_formula(unsigned n, double t, const FloatParams& fp, AsympMode mode);
AsympResult asymp_global(unsigned n, const ContourCurve& curve, const FloatParams& fp);

// pi h_n(c - int) / (n! alpha_0^n) from the exact polynomial.
cplx h_exact_scaled(unsigned n, double t, const sheffer::ParamSet& params);
// The same through the coefficient recurrence of (1-z)^{p+s}(1+z)^{p*-s}
// convolved with prod (1 - beta_i^2 z^2)^{p_i}; usable for large n.
ScaledComplex h_recurrence_scaled(unsigned n, double t, const FloatParams& fp);

struct ParityPoint {
  unsigned n = 0;
  double t = 0;
  cplx exact;          // pi h_n(c - int) / (n! alpha_0^n)
  cplx predicted;      // sign * Im p_n (n even) or sign * i Re p_n (n odd)
  double rel_error = 0;
  double other_branch_rel = 0;  // the same comparison using the wrong branch
  double contour_error = 0;
  bool holds = false;
};

struct ParityReport {
  int even_sign = 0, odd_sign = 0;  // resolved at n = 2 and n = 3
  std::vector<ParityPoint> points;
  bool all_hold = false;
};

ParityReport parity_check(const sheffer::ParamSet& params, const std::vector<unsigned>& ns,
                          const std::vector<double>& ts, double tol = 1e-6);

}  // namespace linezero::asymptotics
