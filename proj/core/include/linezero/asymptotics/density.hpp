#pragma once

#include <vector>

#include "linezero/sheffer/params.hpp"

namespace linezero::asymptotics {

// D(x) = (1/2pi) ln((1 + sqrt(1-x^2)) / (1 - sqrt(1-x^2))) = arcsech(x)/pi on (0,1];
// D(1) = 0 exactly.
double density_D(double x);
// int_0^x D = (x arcsech x + arcsin x)/pi; equals 1/2 at x = 1.
double density_cdf(double x);

struct DensityReport {
  unsigned n = 0;
  std::vector<double> edges;   // bins + 1 edges on [0, 1]
  std::vector<size_t> counts;
  std::vector<double> hist;    // normalized to unit mass on (0,1)
  std::vector<double> model;   // 2 D(x) at bin centers: |t| folds both half-lines
  double ks_distance = 0;      // sup |F_emp - 2 int_0^x D| over the sample
  size_t zeros = 0;
  size_t outside = 0;          // zeros with |t| >= 1
  double mass = 0;
};

// Zeros s_k = c + i y_k of h_n mapped to t_k = |y_k|/n.
DensityReport empirical_density(unsigned n, const sheffer::ParamSet& params, unsigned bins = 25);
// The same from precomputed ordinates t_k.
DensityReport density_from_ordinates(unsigned n, std::vector<double> t, unsigned bins);

}  // namespace linezero::asymptotics
