#include "linezero/asymptotics/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "linezero/error.hpp"
#include "linezero/roots/aberth.hpp"
#include "linezero/sheffer/families.hpp"

namespace linezero::asymptotics {

namespace {
constexpr double kPi = std::numbers::pi;

double arcsech(double x) {
  const double s = std::sqrt((1 - x) * (1 + x));
  return std::log1p(s) - std::log(x);
}
}  // namespace

double density_D(double x) {
  if (!(x > 0 && x <= 1)) throw DomainError("density_D: x must lie in (0,1]");
  if (x == 1) return 0;
  return arcsech(x) / kPi;
}

double density_cdf(double x) {
  if (!(x >= 0 && x <= 1)) throw DomainError("density_cdf: x must lie in [0,1]");
  if (x == 0) return 0;
  return (x * arcsech(x) + std::asin(x)) / kPi;
}

DensityReport density_from_ordinates(unsigned n, std::vector<double> t, unsigned bins) {
  if (bins == 0) throw DomainError("empirical_density: bins must be positive");
  DensityReport r;
  r.n = n;
  r.zeros = t.size();
  r.edges.resize(bins + 1);
  for (unsigned b = 0; b <= bins; ++b) r.edges[b] = double(b) / bins;
  r.counts.assign(bins, 0);

  std::vector<double> inside;
  for (double x : t) {
    x = std::abs(x);
    if (x >= 1) {
      ++r.outside;
      continue;
    }
    inside.push_back(x);
    r.counts[std::min<unsigned>(bins - 1, unsigned(x * bins))]++;
  }
  const double total = inside.size(), width = 1.0 / bins;
  r.hist.resize(bins);
  r.model.resize(bins);
  for (unsigned b = 0; b < bins; ++b) {
    r.hist[b] = total > 0 ? r.counts[b] / (total * width) : 0;
    r.model[b] = 2 * density_D(r.edges[b] + width / 2);
    r.mass += r.hist[b] * width;
  }

  std::sort(inside.begin(), inside.end());
  const size_t m = inside.size();
  for (size_t k = 0; k < m; ++k) {
    const double F = 2 * density_cdf(inside[k]);
    r.ks_distance = std::max({r.ks_distance, std::abs(double(k + 1) / m - F), std::abs(F - double(k) / m)});
  }
  return r;
}

DensityReport empirical_density(unsigned n, const sheffer::ParamSet& params, unsigned bins) {
  if (params.p() + params.pstar() > 0)
    throw DomainError("empirical_density: needs p + p* <= 0 so that every zero lies on the line");
  if (n == 0) throw DomainError("empirical_density: n must be positive");
  roots::RootReport rep = roots::find_roots_stable(sheffer::gen_h(n, params), 0, params.c());
  std::vector<double> t;
  t.reserve(rep.roots.size());
  for (const auto& z : rep.roots) t.push_back(z.imag().to_double() / n);
  return density_from_ordinates(n, std::move(t), bins);
}

}  // namespace linezero::asymptotics
