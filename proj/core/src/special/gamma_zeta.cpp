#include "linezero/special/gamma_zeta.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "linezero/error.hpp"

namespace linezero::special {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kG = 7.0;
constexpr std::array<double, 9> kLanczos{
    0.99999999999980993,     676.5203681218851,    -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,  12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_pole(cplx s) {
  return s.imag() == 0 && s.real() <= 0 && std::floor(s.real()) == s.real();
}

// log Gamma for Re(s) >= 1/2
cplx lgamma_right(cplx s) {
  s -= 1.0;
  cplx a = kLanczos[0];
  for (size_t k = 1; k < kLanczos.size(); ++k) a += kLanczos[k] / (s + static_cast<double>(k));
  cplx t = s + kG + 0.5;
  return 0.5 * std::log(2 * kPi) + (s + 0.5) * std::log(t) - t + std::log(a);
}

}  // namespace

cplx lgamma_c(cplx s) {
  if (is_pole(s)) throw DomainError("gamma: pole at nonpositive integer");
  if (s.real() >= 0.5) return lgamma_right(s);
  // Gamma(s) Gamma(1-s) = pi / sin(pi s)
  return std::log(kPi) - std::log(std::sin(kPi * s)) - lgamma_right(1.0 - s);
}

cplx gamma_c(cplx s) {
  if (is_pole(s)) throw DomainError("gamma: pole at nonpositive integer");
  if (s.real() >= 0.5) return std::exp(lgamma_right(s));
  return kPi / (std::sin(kPi * s) * std::exp(lgamma_right(1.0 - s)));
}

cplx eta_c(cplx s) {
  if (s.real() <= 0) throw DomainError("eta/zeta: requires Re(s) > 0");
  // Borwein (1991), algorithm 2: error about 3 (1 + 2|t|) e^{pi |t| / 2} / (3 + sqrt 8)^n.
  const double t = std::fabs(s.imag());
  const double need = std::log(3 * (1 + 2 * t)) + kPi * t / 2 + 40.0;
  const int n = static_cast<int>(std::ceil(need / std::log(3 + std::sqrt(8.0)))) + 4;

  // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), built by term ratios.
  std::vector<double> d(n + 1);
  double term = 1.0 / n;  // i = 0 term divided by n: (n-1)!/n! = 1/n
  double acc = term;
  d[0] = n * acc;
  for (int i = 1; i <= n; ++i) {
    term *= 4.0 * (n + i - 1) * (n - i + 1) / ((2.0 * i) * (2.0 * i - 1));
    acc += term;
    d[i] = n * acc;
  }
  cplx sum = 0;
  for (int k = 0; k < n; ++k) {
    cplx v = (d[k] - d[n]) * std::exp(-s * std::log(static_cast<double>(k + 1)));
    sum += (k % 2) ? -v : v;
  }
  return -sum / d[n];
}

cplx zeta_c(cplx s) {
  if (s == cplx(1, 0)) throw DomainError("zeta: pole at s = 1");
  return eta_c(s) / (1.0 - std::exp((1.0 - s) * std::numbers::ln2));
}

double laguerre_poly(unsigned n, double alpha, double x) {
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + alpha - x;
  for (unsigned k = 1; k < n; ++k) {
    double next = ((2.0 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre_fn(unsigned n, const series::Rational& alpha, double x) {
  const double a = alpha.get_d();
  if (!(x > 0)) throw DomainError("laguerre_fn: x must be positive");
  if (!(a > -1)) throw DomainError("laguerre_fn: alpha must exceed -1");
  return std::pow(x, a / 2) * std::exp(-x / 2) * laguerre_poly(n, a, x);
}

}  // namespace linezero::special
