#include "linezero/roots/aberth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "linezero/error.hpp"

namespace linezero::roots {

namespace {

constexpr unsigned kIterationCap = 600;

// log|q| via the exponent/mantissa split, safe for huge rationals.
double log_abs(const Rational& q) {
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::log(std::fabs(mn / md)) + static_cast<double>(en - ed) * std::numbers::ln2;
}

// Starting points on circles whose radii come from the upper convex hull of
// (k, log|a_k|) (Bini's Newton-polygon initialization).
std::vector<std::complex<double>> initial_guesses(const std::vector<Rational>& a) {
  const int n = static_cast<int>(a.size()) - 1;
  std::vector<int> idx;
  std::vector<double> lg(a.size(), -std::numeric_limits<double>::infinity());
  for (int k = 0; k <= n; ++k)
    if (sgn(a[k]) != 0) lg[k] = log_abs(a[k]);

  std::vector<int> hull;
  for (int k = 0; k <= n; ++k) {
    if (sgn(a[k]) == 0) continue;
    while (hull.size() >= 2) {
      int i = hull[hull.size() - 2], j = hull.back();
      // drop j if it lies on or below the segment i-k
      double cross = (lg[j] - lg[i]) * (k - i) - (lg[k] - lg[i]) * (j - i);
      if (cross <= 0) hull.pop_back();
      else break;
    }
    hull.push_back(k);
  }

  std::vector<std::complex<double>> z;
  z.reserve(n);
  constexpr double sigma = 0.7;
  for (size_t h = 0; h + 1 < hull.size(); ++h) {
    int i = hull[h], j = hull[h + 1];
    int m = j - i;
    double u = std::exp((lg[i] - lg[j]) / m);
    for (int l = 0; l < m; ++l) {
      double ang = 2 * std::numbers::pi * l / m + 2 * std::numbers::pi * i / n + sigma;
      z.emplace_back(u * std::cos(ang), u * std::sin(ang));
    }
  }
  return z;
}

// Extended-precision pre-solve. Long double keeps the whole exponent range of
// the coefficients of moderate degree, so roots can be located cheaply and
// handed to MPFR for polishing. Returns nothing if magnitudes could overflow.
std::optional<std::vector<std::complex<long double>>> presolve_ld(const std::vector<Rational>& coeffs) {
  using C = std::complex<long double>;
  const size_t n = coeffs.size() - 1;
  auto guesses = initial_guesses(coeffs);
  double rmax = 1;
  for (const auto& g : guesses) rmax = std::max(rmax, std::abs(g));
  std::vector<long double> a(n + 1), absa(n + 1);
  for (size_t k = 0; k <= n; ++k) {
    if (sgn(coeffs[k]) == 0) continue;
    double lg = log_abs(coeffs[k]);
    if (lg + static_cast<double>(k) * std::log(4 * rmax) > 11000 || lg < -11000) return std::nullopt;
    HPFloat h(coeffs[k], 128);
    a[k] = h.to_long_double();
    absa[k] = std::fabs(a[k]);
  }
  std::vector<C> z(guesses.begin(), guesses.end());
  const long double eps = 8.0L * static_cast<long double>(n + 1) * std::numeric_limits<long double>::epsilon();
  std::vector<char> done(n, 0);
  size_t remaining = n;
  for (unsigned it = 0; remaining > 0 && it < kIterationCap; ++it) {
    for (size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      C p = a[n], d = 0;
      long double rho = std::abs(z[i]), mag = absa[n];
      for (size_t k = n; k-- > 0;) {
        d = d * z[i] + p;
        p = p * z[i] + a[k];
        mag = mag * rho + absa[k];
      }
      if (!std::isfinite(mag)) return std::nullopt;
      if (std::abs(p) <= eps * mag) {
        done[i] = 1;
        --remaining;
        continue;
      }
      if (d == C(0)) {
        z[i] += C(0, 1e-3L * (1 + rho));
        continue;
      }
      C N = p / d, S = 0;
      for (size_t j = 0; j < n; ++j)
        if (j != i && z[i] != z[j]) S += 1.0L / (z[i] - z[j]);
      C den = 1.0L - N * S;
      z[i] -= den == C(0) ? N : N / den;
    }
  }
  return z;
}

// Scratch registers for the inner loops; avoids allocation per operation.
struct Regs {
  explicit Regs(long bits) {
    for (auto* r : {&pr, &pi, &dr, &di, &t0, &t1, &sr, &si, &den, &mag, &rho, &nr, &ni, &wr, &wi, &bound})
      mpfr_init2(*r, bits);
  }
  ~Regs() {
    for (auto* r : {&pr, &pi, &dr, &di, &t0, &t1, &sr, &si, &den, &mag, &rho, &nr, &ni, &wr, &wi, &bound})
      mpfr_clear(*r);
  }
  Regs(const Regs&) = delete;
  Regs& operator=(const Regs&) = delete;
  mpfr_t pr, pi, dr, di, t0, t1, sr, si, den, mag, rho, nr, ni, wr, wi, bound;
};

// p(z), p'(z) and sum |a_k| |z|^k by Horner.
void horner(const std::vector<HPFloat>& a, const std::vector<HPFloat>& absa, mpfr_srcptr x, mpfr_srcptr y, Regs& R) {
  const size_t n = a.size() - 1;
  mpfr_set(R.pr, a[n].raw(), MPFR_RNDN);
  mpfr_set_zero(R.pi, 1);
  mpfr_set_zero(R.dr, 1);
  mpfr_set_zero(R.di, 1);
  mpfr_hypot(R.rho, x, y, MPFR_RNDN);
  mpfr_set(R.mag, absa[n].raw(), MPFR_RNDN);
  for (size_t k = n; k-- > 0;) {
    // d = d z + p
    mpfr_fmms(R.t0, R.dr, x, R.di, y, MPFR_RNDN);
    mpfr_fmma(R.t1, R.dr, y, R.di, x, MPFR_RNDN);
    mpfr_add(R.dr, R.t0, R.pr, MPFR_RNDN);
    mpfr_add(R.di, R.t1, R.pi, MPFR_RNDN);
    // p = p z + a_k
    mpfr_fmms(R.t0, R.pr, x, R.pi, y, MPFR_RNDN);
    mpfr_fmma(R.t1, R.pr, y, R.pi, x, MPFR_RNDN);
    mpfr_add(R.pr, R.t0, a[k].raw(), MPFR_RNDN);
    mpfr_set(R.pi, R.t1, MPFR_RNDN);
    mpfr_mul(R.mag, R.mag, R.rho, MPFR_RNDN);
    mpfr_add(R.mag, R.mag, absa[k].raw(), MPFR_RNDN);
  }
}

struct Solve {
  std::vector<ComplexHP> roots;
  unsigned iterations = 0;
};

Solve aberth(const std::vector<Rational>& coeffs, long bits, const std::vector<ComplexHP>* start = nullptr) {
  const size_t n = coeffs.size() - 1;
  std::vector<HPFloat> a, absa;
  a.reserve(n + 1);
  absa.reserve(n + 1);
  for (const auto& c : coeffs) {
    a.emplace_back(c, bits);
    absa.push_back(series::abs(a.back()));
  }

  std::vector<HPFloat> x, y;
  if (start) {
    for (const auto& z : *start) {
      x.push_back(z.real());
      y.push_back(z.imag());
      x.back().set_bits(bits);
      y.back().set_bits(bits);
    }
  } else {
    for (const auto& g : initial_guesses(coeffs)) {
      x.emplace_back(g.real(), bits);
      y.emplace_back(g.imag(), bits);
    }
  }

  std::vector<std::complex<long double>> zl(n);
  for (size_t i = 0; i < n; ++i) zl[i] = {mpfr_get_ld(x[i].raw(), MPFR_RNDN), mpfr_get_ld(y[i].raw(), MPFR_RNDN)};

  Regs R(bits);
  // Stop threshold factor: a few units of roundoff per Horner step.
  HPFloat eps = HPFloat(8.0 * static_cast<double>(n + 1), bits) * series::exp2(-bits, bits);
  std::vector<char> done(n, 0);
  size_t remaining = n;
  unsigned it = 0;
  for (; remaining > 0 && it < kIterationCap; ++it) {
    for (size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      horner(a, absa, x[i].raw(), y[i].raw(), R);
      mpfr_hypot(R.t0, R.pr, R.pi, MPFR_RNDN);
      mpfr_mul(R.bound, R.mag, eps.raw(), MPFR_RNDN);
      if (mpfr_lessequal_p(R.t0, R.bound)) {
        done[i] = 1;
        --remaining;
        continue;
      }
      // Newton ratio N = p / p'
      mpfr_sqr(R.den, R.dr, MPFR_RNDN);
      mpfr_fma(R.den, R.di, R.di, R.den, MPFR_RNDN);
      if (mpfr_zero_p(R.den)) {
        // Stationary point: nudge off it.
        mpfr_mul_d(R.t0, x[i].raw(), 1e-3, MPFR_RNDN);
        mpfr_add_d(R.t0, R.t0, 1e-3, MPFR_RNDN);
        mpfr_add(y[i].raw(), y[i].raw(), R.t0, MPFR_RNDN);
        continue;
      }
      mpfr_fmma(R.nr, R.pr, R.dr, R.pi, R.di, MPFR_RNDN);
      mpfr_fmms(R.ni, R.pi, R.dr, R.pr, R.di, MPFR_RNDN);
      mpfr_div(R.nr, R.nr, R.den, MPFR_RNDN);
      mpfr_div(R.ni, R.ni, R.den, MPFR_RNDN);
      // S = sum_{j != i} 1 / (z_i - z_j). Only the correction term depends on S,
      // so extended precision suffices unless two roots nearly coincide.
      std::complex<long double> S = 0;
      const std::complex<long double> zi = zl[i];
      mpfr_set_zero(R.sr, 1);
      mpfr_set_zero(R.si, 1);
      for (size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const std::complex<long double> dz = zi - zl[j];
        if (std::abs(dz) > 1e-12L * std::max(1.0L, std::abs(zi))) {
          S += 1.0L / dz;
          continue;
        }
        mpfr_sub(R.t0, x[i].raw(), x[j].raw(), MPFR_RNDN);
        mpfr_sub(R.t1, y[i].raw(), y[j].raw(), MPFR_RNDN);
        mpfr_sqr(R.den, R.t0, MPFR_RNDN);
        mpfr_fma(R.den, R.t1, R.t1, R.den, MPFR_RNDN);
        if (mpfr_zero_p(R.den)) continue;
        mpfr_div(R.t0, R.t0, R.den, MPFR_RNDN);
        mpfr_div(R.t1, R.t1, R.den, MPFR_RNDN);
        mpfr_add(R.sr, R.sr, R.t0, MPFR_RNDN);
        mpfr_sub(R.si, R.si, R.t1, MPFR_RNDN);
      }
      {
        mpfr_t tmp;
        mpfr_init2(tmp, bits);
        mpfr_set_ld(tmp, S.real(), MPFR_RNDN);
        mpfr_add(R.sr, R.sr, tmp, MPFR_RNDN);
        mpfr_set_ld(tmp, S.imag(), MPFR_RNDN);
        mpfr_add(R.si, R.si, tmp, MPFR_RNDN);
        mpfr_clear(tmp);
      }
      // w = N / (1 - N S)
      mpfr_fmms(R.wr, R.nr, R.sr, R.ni, R.si, MPFR_RNDN);
      mpfr_fmma(R.wi, R.nr, R.si, R.ni, R.sr, MPFR_RNDN);
      mpfr_ui_sub(R.wr, 1, R.wr, MPFR_RNDN);
      mpfr_neg(R.wi, R.wi, MPFR_RNDN);
      mpfr_sqr(R.den, R.wr, MPFR_RNDN);
      mpfr_fma(R.den, R.wi, R.wi, R.den, MPFR_RNDN);
      if (mpfr_zero_p(R.den)) {
        mpfr_set(R.t0, R.nr, MPFR_RNDN);
        mpfr_set(R.t1, R.ni, MPFR_RNDN);
      } else {
        mpfr_fmma(R.t0, R.nr, R.wr, R.ni, R.wi, MPFR_RNDN);
        mpfr_fmms(R.t1, R.ni, R.wr, R.nr, R.wi, MPFR_RNDN);
        mpfr_div(R.t0, R.t0, R.den, MPFR_RNDN);
        mpfr_div(R.t1, R.t1, R.den, MPFR_RNDN);
      }
      mpfr_sub(x[i].raw(), x[i].raw(), R.t0, MPFR_RNDN);
      mpfr_sub(y[i].raw(), y[i].raw(), R.t1, MPFR_RNDN);
      zl[i] = {mpfr_get_ld(x[i].raw(), MPFR_RNDN), mpfr_get_ld(y[i].raw(), MPFR_RNDN)};
    }
  }
  if (remaining > 0)
    throw ConvergenceError("aberth: " + std::to_string(remaining) + " of " + std::to_string(n) +
                           " roots unconverged after " + std::to_string(kIterationCap) + " sweeps at " +
                           std::to_string(bits) + " bits");

  Solve out;
  out.iterations = it;
  for (size_t i = 0; i < n; ++i) out.roots.emplace_back(x[i], y[i]);
  return out;
}

void certify(const SPoly& poly, RootReport& rep) {
  const long bits = rep.precision_bits;
  rep.residuals.clear();
  rep.residual_bounds.clear();
  rep.certified = true;
  HPFloat scale = series::exp2(-bits / 2, 2 * bits);
  for (const auto& r : rep.roots) {
    ComplexHP at = r;
    at.set_bits(2 * bits);
    auto ev = series::spoly_eval(poly, at);
    HPFloat res = series::abs(ev.value);
    // sum |a_k| |r|^k at doubled precision
    HPFloat rho = series::abs(at);
    HPFloat mag(2 * bits);
    const auto& c = poly.coeffs();
    for (size_t k = c.size(); k-- > 0;) {
      mag *= rho;
      mag += series::abs(HPFloat(c[k], 2 * bits));
    }
    HPFloat bound = mag * scale;
    if (res > bound) rep.certified = false;
    rep.residuals.push_back(std::move(res));
    rep.residual_bounds.push_back(std::move(bound));
  }
}

}  // namespace

long default_precision(int degree) {
  if (degree <= 64) return 256;
  long b = 256L + degree / 4;
  return (b + 63) / 64 * 64;
}

namespace {

RootReport solve(const SPoly& poly, long precision_bits, const Rational& line_c, double tau_line,
                 const std::vector<ComplexHP>* start) {
  if (poly.degree() < 1) throw DomainError("find_roots: polynomial degree must be at least 1");
  const long bits = precision_bits > 0 ? precision_bits : default_precision(poly.degree());
  if (bits < 64) throw DomainError("find_roots: precision must be at least 64 bits");

  RootReport rep;
  rep.precision_bits = bits;

  const auto& c = poly.coeffs();
  size_t zeros = 0;
  while (sgn(c[zeros]) == 0) ++zeros;
  for (size_t k = 0; k < zeros; ++k) rep.roots.emplace_back(bits);

  std::vector<Rational> rest(c.begin() + zeros, c.end());
  if (rest.size() == 2) {
    rep.roots.emplace_back(HPFloat(Rational(-rest[0] / rest[1]), bits), HPFloat(bits));
  } else if (rest.size() > 2) {
    // Seeds for a polish run: the previous nonzero roots.
    std::vector<ComplexHP> seeds;
    if (start) {
      for (const auto& z : *start)
        if (!(z.real().is_zero() && z.imag().is_zero())) seeds.push_back(z);
      if (seeds.size() != rest.size() - 1) seeds.clear();
    }
    if (seeds.empty()) {
      // Converge cheaply first; the MPFR run then only polishes.
      if (auto pre = presolve_ld(rest)) {
        for (const auto& z : *pre) {
          ComplexHP w(bits);
          mpfr_set_ld(w.real().raw(), z.real(), MPFR_RNDN);
          mpfr_set_ld(w.imag().raw(), z.imag(), MPFR_RNDN);
          seeds.push_back(std::move(w));
        }
      }
    }
    auto sol = aberth(rest, bits, seeds.empty() ? nullptr : &seeds);
    rep.iterations = sol.iterations;
    for (auto& r : sol.roots) rep.roots.push_back(std::move(r));
  }

  // Deterministic order: by imaginary part, then real part.
  std::stable_sort(rep.roots.begin(), rep.roots.end(), [](const ComplexHP& u, const ComplexHP& v) {
    if (!(u.imag() == v.imag())) return u.imag() < v.imag();
    return u.real() < v.real();
  });

  certify(poly, rep);
  classify(rep, line_c, tau_line);
  return rep;
}

}  // namespace

RootReport find_roots(const SPoly& poly, long precision_bits, const Rational& line_c, double tau_line) {
  return solve(poly, precision_bits, line_c, tau_line, nullptr);
}

double match_distance(const std::vector<ComplexHP>& a, const std::vector<ComplexHP>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<std::complex<double>> bb;
  for (const auto& z : b) bb.push_back(z.to_complex());
  std::vector<char> used(bb.size(), 0);
  double worst = 0;
  for (const auto& z : a) {
    auto zd = z.to_complex();
    size_t best = bb.size();
    double bd = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < bb.size(); ++j) {
      if (used[j]) continue;
      double d = std::abs(zd - bb[j]);
      if (d < bd) {
        bd = d;
        best = j;
      }
    }
    if (best == bb.size()) return std::numeric_limits<double>::infinity();
    used[best] = 1;
    worst = std::max(worst, bd / std::max(1.0, std::abs(zd)));
  }
  return worst;
}

RootReport find_roots_stable(const SPoly& poly, long precision_bits, const Rational& line_c, double tau_line,
                             int max_doublings) {
  long bits = precision_bits > 0 ? precision_bits : default_precision(poly.degree());
  std::optional<RootReport> prev;
  std::string last_failure;
  for (int attempt = 0; attempt <= max_doublings + 1; ++attempt, bits *= 2) {
    RootReport cur;
    try {
      // After the first solve, the doubled-precision run is seeded with the
      // previous roots, which is an independent polish rather than a re-solve.
      cur = solve(poly, bits, line_c, tau_line, prev ? &prev->roots : nullptr);
    } catch (const ConvergenceError& e) {
      last_failure = e.what();
      prev.reset();
      continue;
    }
    if (prev && prev->certified && match_distance(prev->roots, cur.roots) < tau_line / 10) return *prev;
    prev = std::move(cur);
  }
  throw ConvergenceError("find_roots_stable: no stable root set up to " + std::to_string(bits / 2) + " bits" +
                         (last_failure.empty() ? "" : " (" + last_failure + ")"));
}

void classify(RootReport& rep, const Rational& line_c, double tau_line) {
  rep.line_c = line_c;
  rep.tau_line = tau_line;
  const size_t n = rep.roots.size();
  rep.on_line.assign(n, false);
  rep.offline_count = 0;
  rep.unpaired_count = 0;
  const long bits = rep.precision_bits;
  HPFloat c(line_c, bits);
  std::vector<std::complex<double>> zd;
  for (const auto& r : rep.roots) zd.push_back(r.to_complex());
  for (size_t i = 0; i < n; ++i) {
    HPFloat dist = series::abs(rep.roots[i].real() - c);
    double scale = std::max(1.0, std::abs(zd[i]));
    rep.on_line[i] = dist.to_double() < tau_line * scale;
  }
  // Pairing: an off-line root r must have a partner near 2c - conj(r).
  const double cd = line_c.get_d();
  for (size_t i = 0; i < n; ++i) {
    if (rep.on_line[i]) continue;
    ++rep.offline_count;
    std::complex<double> mirror(2 * cd - zd[i].real(), zd[i].imag());
    double self_gap = std::abs(mirror - zd[i]);
    bool found = false;
    for (size_t j = 0; j < n && !found; ++j)
      if (j != i && std::abs(zd[j] - mirror) < std::max(1e-3 * self_gap, 1e-12 * std::max(1.0, std::abs(mirror))))
        found = true;
    if (!found) ++rep.unpaired_count;
  }
}

}  // namespace linezero::roots
