#pragma once

#include <vector>

#include "linezero/series/hp.hpp"
#include "linezero/series/spoly.hpp"

namespace linezero::roots {

using series::ComplexHP;
using series::HPFloat;
using series::Rational;
using series::SPoly;

struct RootReport {
  std::vector<ComplexHP> roots;
  // |P(root)| evaluated exactly-rounded at twice the working precision.
  std::vector<HPFloat> residuals;
  // 2^{-bits/2} * sum_k |a_k| |root|^k
  std::vector<HPFloat> residual_bounds;
  Rational line_c;
  double tau_line = 1e-10;
  std::vector<bool> on_line;
  size_t offline_count = 0;
  // Off-line roots whose mirror image 2c - conj(r) has no partner root.
  size_t unpaired_count = 0;
  long precision_bits = 0;
  unsigned iterations = 0;
  bool certified = false;
};

// 256 bits up to degree 64, then 256 + degree/4 rounded up to a multiple of 64.
long default_precision(int degree);

// One Aberth-Ehrlich solve at the given precision (0 = default), followed by
// residual certification and classification against Re(s) = line_c.
// Throws ConvergenceError when the iteration cap is hit.
RootReport find_roots(const SPoly& poly, long precision_bits = 0, const Rational& line_c = 0, double tau_line = 1e-10);

// find_roots, repeated at doubled precision until certification holds and
// the root set agrees with the next doubling to tau_line/10.
RootReport find_roots_stable(const SPoly& poly, long precision_bits = 0, const Rational& line_c = 0,
                             double tau_line = 1e-10, int max_doublings = 4);

// Recompute on_line / offline_count / unpaired_count for a new line and tolerance.
void classify(RootReport& report, const Rational& line_c, double tau_line);

// Largest distance from roots of `a` to their nearest partner in `b`
// (greedy one-to-one matching), in double.
double match_distance(const std::vector<ComplexHP>& a, const std::vector<ComplexHP>& b);

}  // namespace linezero::roots
