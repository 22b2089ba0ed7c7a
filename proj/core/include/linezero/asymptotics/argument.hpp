#pragma once

#include <optional>
#include <vector>

#include "linezero/asymptotics/saddle.hpp"
#include "linezero/sheffer/params.hpp"

namespace linezero::asymptotics {

// alpha in (-pi, pi] with (c+p+1/2) pi = 2 k pi + alpha, then the five-way case split.
double eta_select(double c, double p);
double eta_angle(double c, double p);

struct ArgTrackOptions {
  double tau = 0.02;
  double t_max = 0.99;       // last t at which the Laplace factor is evaluated
  unsigned steps = 200;
  unsigned max_refine = 6;   // grid doublings allowed for unwrapping
};

struct ArgTrack {
  unsigned n = 0;
  double tau = 0, t_max = 0;
  unsigned grid_points = 0;
  bool unwrap_ok = false;

  // Pieces of Delta arg over tau <= t < 1.
  double psi_part = 0, phi_part = 0, laplace_part = 0;
  double tracked = 0;       // the three pieces together, unwrapped on the grid
  double predicted = 0;     // n pi/2 + n tau ln tau - n (ln 2 + 1) tau + pi (1-p-c)/2
  double tolerance = 0;     // pi + 2 (n tau^2 + tau)
  bool within = false;
  bool laplace_upper = true;  // Im of the Laplace factor stayed >= 0

  // Whole-range prediction n pi/2 + pi(1-p-c)/2 - |c+p| pi/2 - pi/4 - eta.
  double eta = 0;
  double full_prediction = 0;

  // Zero counts on t in [tau, 1): argument principle, root finder, density model.
  double count_from_arg = 0;
  double count_from_density = 0;
  std::optional<size_t> count_from_roots;
};

ArgTrack delta_arg_track(unsigned n, const FloatParams& fp, const ArgTrackOptions& opt = {});
// Adds the root-finder count (exact rational family with p + p* <= 0 only).
ArgTrack delta_arg_track(unsigned n, const sheffer::ParamSet& params, const ArgTrackOptions& opt = {});

struct ZStarRow {
  double t = 0;
  double z_star = 0;      // bisection root in (1, inf)
  double z_closed = 0;    // (e^X + A)/(e^X - A), X = arcsin(t)/t
  double z_variant = 0; // (e^X - A)/(A - e^X), identically -1
  double ln_z = 0;
  double margin = 0;      // t pi/2 - ln z*
  double im_residual = 0; // Im(phi(z*) - phi(zeta)) at the bisection root
  double re_gap = 0;      // Re(phi(z*) - phi(zeta)), should equal the margin
  bool holds = false;
};

std::vector<ZStarRow> z_star_check(const std::vector<double>& t_grid);

}  // namespace linezero::asymptotics
