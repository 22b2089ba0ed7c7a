#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace linezero::asymptotics {

// g(r,s) = 4 ln^2 r (1 - r^2(1-2s))^2 r^2 - s (r^2-1)^2 (r^4 + 1 - 2 r^2 (1-2s)),
// the square comparison behind f(z) < 0 for |z| > 1. `single_power` uses
// (r^2 - 1) to the first power instead.
long double g_rs(long double r, long double s, bool single_power = false);
long double g_right_closed(long double r);  // g(r, 1)
long double g_left_closed(long double r);   // g(r, 1/2 - 1/(2r^2))

// t on the curve Im phi_z(u + iv, t) = 0.
double t_of_uv(double u, double v);
// Expanded polynomial forms of the constraints, and the same conditions evaluated directly.
double imphi2_poly(double u, double v);
double rephi2_poly(double u, double v);
double im_phi_zz_direct(double u, double v);
double re_phi_zz_direct(double u, double v);

struct AuditGrid {
  unsigned r_points = 400;
  unsigned s_points = 200;
  double r_max = 1e3;
  double r_min_offset = 1e-3;  // smallest r - 1 on the log grid
  unsigned starts = 8;         // multi-start grid per axis for the extrema
  std::vector<double> t_curves{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  double curve_y_neg = 3.0;
};

struct Extremum {
  std::string constraint;  // "Im phi_zz = 0" or "Re phi_zz = 0"
  std::string source;      // "polynomial form" or "direct"
  std::string sense;       // "min" or "max"
  double t = 0, u = 0, v = 0;
  double constraint_residual = 0;
  bool found = false;
};

struct BoundRow {
  double t = 0;
  size_t samples = 0;            // samples with y < 0
  size_t min_form_violations = 0;
  size_t max_form_violations = 0;
  size_t im_dz_nonpositive = 0;  // over all samples y != 0
  size_t sign_mismatch = 0;
  double L = 0, z_L = 0;
};

struct AppendixReport {
  size_t g_points = 0;
  size_t g_counterexamples = 0;        // g >= 0 with the squared (r^2-1)
  size_t g_single_power_nonnegative = 0;    // g >= 0 with (r^2 - 1) to the first power
  double g_max = -std::numeric_limits<double>::infinity();  // largest g / scale seen
  double first_counter_r = 0, first_counter_s = 0;
  double single_power_example_r = 0, single_power_example_s = 0;
  double right_closed_rel_err = 0;
  double left_closed_rel_err = 0;
  double g_2_1 = 0;
  std::vector<Extremum> extrema;
  std::vector<BoundRow> bounds;
  size_t im_dz_failures = 0;
};

AppendixReport appendix_audit(const AuditGrid& grid = {});

// Two-dimensional Nelder-Mead on a penalized objective; exposed for testing.
struct NMResult {
  double x = 0, y = 0, f = 0;
  unsigned iterations = 0;
};
NMResult nelder_mead(const std::function<double(double, double)>& f, double x0, double y0, double step,
                     double tol = 1e-15, unsigned max_iter = 20000);

}  // namespace linezero::asymptotics
