#pragma once

#include <vector>

#include "linezero/asymptotics/saddle.hpp"

namespace linezero::asymptotics {

struct CurveSample {
  double y = 0;
  cplx z, dz, d2z;
};

struct TraceOptions {
  double rtol = 1e-10, atol = 1e-13;
  double h_max = 0.02;
  double defect_tol = 1e-10;
  double seed_y = 1e-4;     // |y| below which the local expansion seeds the curve
  double series_y = 1e-6;   // |y| below which the evaluator uses the expansion directly
  size_t max_steps = 200000;
};

// Counts of violated pointwise claims along the traced samples.
struct CurveChecks {
  size_t samples = 0;
  size_t outside_quadrant = 0;   // Re z < 0 or Im z > 0
  size_t im_dz_nonpositive = 0;  // Im z'(y) <= 0, y != 0
  size_t sign_mismatch = 0;      // sign(Im phi_z) != sign(y)
  size_t modulus_wrong_side = 0; // |z| >= 1 for y > 0 or |z| <= 1 for y < 0
  double max_defect = 0;
  bool ok() const {
    return outside_quadrant == 0 && im_dz_nonpositive == 0 && sign_mismatch == 0 && modulus_wrong_side == 0;
  }
};

// Steepest-descent curve phi(z(y),t) - phi(zeta,t) = -y^2 through the saddle,
// traced from y = 0 in both directions.
class ContourCurve {
 public:
  ContourCurve(double t, double y_neg_max, const TraceOptions& opt = {});

  double t() const { return t_; }
  const SaddleData& saddle() const { return saddle_; }
  const std::vector<CurveSample>& samples() const { return samples_; }
  double L() const { return L_; }          // positive-side real-axis crossing
  double z_L() const { return zL_; }       // z(L), in (0,1)
  double y_min() const { return -ymax_; }  // negative-side truncation
  cplx a1() const { return a1_; }
  cplx a2() const { return a2_; }
  const CurveChecks& checks() const { return checks_; }

  // z(y) and z'(y) for y in [y_min, L], predicted from the nearest sample and
  // projected onto the level set.
  CurveSample at(double y) const;

 private:
  void trace_side(double direction);
  cplx project(cplx z, double y) const;
  CurveSample make_sample(double y, cplx z) const;
  void audit();

  double t_, ymax_;
  TraceOptions opt_;
  SaddleData saddle_;
  cplx a1_, a2_;
  std::vector<CurveSample> samples_;
  double L_ = 0, zL_ = 0;
  CurveChecks checks_;
};

ContourCurve trace_curve(double t, double y_neg_max, const TraceOptions& opt = {});

}  // namespace linezero::asymptotics
