#include "linezero/special/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "linezero/error.hpp"
#include "linezero/sheffer/families.hpp"
#include "linezero/special/gamma_zeta.hpp"

namespace linezero::special {

namespace {
constexpr double kPi = std::numbers::pi;

double rel(cplx a, cplx b) {
  double d = std::abs(b);
  return std::abs(a - b) / (d > 0 ? d : 1.0);
}

}  // namespace

QuadResult mellin_quad(const std::function<double(double)>& f, cplx s, double reltol) {
  QuadOptions opt;
  opt.reltol = reltol;
  const cplx sm1 = s - 1.0;
  return integrate_exp_sinh(
      [&](double x) -> cplx {
        double fx = f(x);
        if (fx == 0) return 0;
        return fx * std::exp(sm1 * std::log(x));
      },
      0.0, opt);
}

const char* to_string(MellinMode m) {
  switch (m) {
    case MellinMode::bump: return "bump";
    case MellinMode::meixner: return "meixner";
    case MellinMode::phi: return "phi";
    case MellinMode::phi_x2: return "phi_x2";
  }
  return "?";
}

MellinMode parse_mellin_mode(const std::string& text) {
  if (text == "bump") return MellinMode::bump;
  if (text == "meixner") return MellinMode::meixner;
  if (text == "phi") return MellinMode::phi;
  if (text == "phi_x2") return MellinMode::phi_x2;
  throw DomainError("unknown mellin mode '" + text + "' (expected bump, meixner, phi or phi_x2)");
}

std::vector<MellinPoint> verify_mellin_family(const MellinFamily& fam, const std::vector<unsigned>& indices,
                                              const std::vector<cplx>& s_grid, double reltol) {
  std::vector<MellinPoint> out;
  for (unsigned n : indices) {
    std::function<double(double)> f;
    std::function<cplx(cplx)> closed;
    switch (fam.mode) {
      case MellinMode::bump: {
        const double a = fam.alpha.get_d();
        auto P = sheffer::bump_P(n, fam.alpha);
        f = [n, alpha = fam.alpha](double x) { return laguerre_fn(n, alpha, x); };
        closed = [a, P](cplx s) {
          cplx w = s + a / 2;
          return std::exp(w * std::numbers::ln2) * gamma_c(w) * P.eval(s);
        };
        break;
      }
      case MellinMode::meixner: {
        const double bm1 = fam.b.get_d() - 1, scale = 1 - 1 / fam.cpar.get_d();
        const double kfact = series::factorial(n).get_d();
        auto M = sheffer::meixner(n, fam.b, fam.cpar);
        f = [=](double x) { return kfact * laguerre_poly(n, bm1, scale * x) * std::exp(-x); };
        closed = [M](cplx s) { return gamma_c(s) * M.eval(-s); };
        break;
      }
      case MellinMode::phi:
      case MellinMode::phi_x2: {
        auto phi = sheffer::phi_n(n, fam.p, fam.pstar);
        auto q = sheffer::gen_q(n, fam.p, fam.pstar);
        if (fam.mode == MellinMode::phi) {
          f = [phi](double x) { return phi(2 * kPi * x); };
          closed = [q](cplx s) { return q.eval(s) * std::exp(-s * std::log(kPi)) * gamma_c(s); };
        } else {
          f = [phi](double x) { return phi(2 * kPi * x * x); };
          closed = [q](cplx s) {
            cplx h = s / 2.0;
            return 0.5 * q.eval(h) * std::exp(-h * std::log(kPi)) * gamma_c(h);
          };
        }
        break;
      }
    }
    for (cplx s : s_grid) {
      MellinPoint pt;
      pt.index = n;
      pt.s = s;
      auto q = mellin_quad(f, s, reltol);
      pt.lhs = q.value;
      pt.quad_error = q.abs_error_estimate;
      pt.converged = q.converged;
      pt.rhs = closed(s);
      pt.rel_error = rel(pt.lhs, pt.rhs);
      out.push_back(pt);
    }
  }
  return out;
}

PsiStar::PsiStar(unsigned j, const Rational& p, const Rational& pstar) : j_(j) {
  auto phi = sheffer::phi_n(j, p, pstar);
  for (const auto& c : phi.prefactor.coeffs()) {
    coef_.push_back(c.get_d());
    absc_.push_back(std::fabs(c.get_d()));
  }
  const size_t deg = coef_.empty() ? 0 : coef_.size() - 1;
  // For u >= u*, each u^k e^{-u/4} is decreasing, so g(u) <= B e^{-u/4}.
  ustar_ = std::max(4.0 * static_cast<double>(deg), 2.0);
  for (size_t k = 0; k < absc_.size(); ++k) {
    bconst_ += absc_[k] * std::pow(ustar_, static_cast<double>(k)) * std::exp(-ustar_ / 4);
    // sup_u u^k e^{-u/2} = (2k/e)^k
    g0_ += absc_[k] * (k ? std::pow(2.0 * k / std::numbers::e, static_cast<double>(k)) : 1.0);
    // int_0^inf v^{2k} e^{-v^2/2} dv = 2^{k-1/2} Gamma(k+1/2)
    g1_ += absc_[k] * std::pow(2.0, k - 0.5) * std::tgamma(k + 0.5);
  }
  g1_ /= std::sqrt(2 * kPi);
}

double PsiStar::prefactor(double u) const {
  double r = 0;
  for (size_t k = coef_.size(); k-- > 0;) r = r * u + coef_[k];
  return r;
}

double PsiStar::tail_bound(double x, unsigned M) const {
  if (M == 0) return std::numeric_limits<double>::infinity();
  const double m = static_cast<double>(M);
  if (2 * kPi * x * m * m < ustar_) return std::numeric_limits<double>::infinity();
  return bconst_ * std::exp(-kPi * x * m * m / 2) / (kPi * x * m);
}

double PsiStar::head_bound(double x0, double sigma) const {
  return g0_ * std::pow(x0, sigma) / sigma + g1_ * std::pow(x0, sigma - 0.5) / (sigma - 0.5);
}

ThetaValue PsiStar::operator()(double x, double reltol, unsigned max_terms) const {
  if (!(x > 0)) throw DomainError("psi_star: x must be positive");
  ThetaValue out;
  double sum = 0, abs_sum = 0;
  unsigned n = 0;
  while (n < max_terms) {
    ++n;
    double u = 2 * kPi * x * static_cast<double>(n) * n;
    double term = prefactor(u) * std::exp(-u / 2);
    sum += term;
    abs_sum += std::fabs(term);
    double tb = tail_bound(x, n);
    if (tb <= reltol * std::fabs(sum) || (sum == 0 && abs_sum == 0 && tb == 0)) break;
    if (tb <= 1e-300) break;
  }
  out.value = sum;
  out.tail.truncation = n;
  out.tail.tail_bound = tail_bound(x, n);
  // Below 1e-300 the tail is negligible in absolute terms even when the sum
  // itself has underflowed.
  out.tail.capped = out.tail.tail_bound > std::max(reltol * std::fabs(sum), 1e-300);
  return out;
}

ThetaValue psi_star(unsigned j, const Rational& p, const Rational& pstar, double x, double reltol) {
  return PsiStar(j, p, pstar)(x, reltol);
}

std::vector<ZetaPoint> verify_zeta_identity(const std::vector<unsigned>& js, const Rational& p, const Rational& pstar,
                                            const std::vector<double>& s_grid, double reltol) {
  std::vector<ZetaPoint> out;
  for (unsigned j : js) {
    PsiStar psi(j, p, pstar);
    auto q = sheffer::gen_q(j, p, pstar);
    for (double s : s_grid) {
      if (!(s > 2)) throw DomainError("verify_zeta_identity: s must exceed 2");
      ZetaPoint pt;
      pt.j = j;
      pt.s = s;
      const double sigma = s / 2;
      pt.rhs = (q.eval(cplx(sigma, 0)) * std::exp(-sigma * std::log(kPi)) * gamma_c(sigma) * zeta_c(s)).real();

      QuadOptions opt;
      opt.reltol = reltol;
      bool all_terms_ok = true;
      auto integrand = [&](double x) -> cplx {
        auto v = psi(x, reltol * 1e-2);
        if (v.tail.capped) all_terms_ok = false;
        return v.value * std::pow(x, sigma - 1);
      };
      // Magnitude estimate away from 0 fixes where the head can be dropped.
      auto rough = integrate_exp_sinh(integrand, 1e-2, opt);
      double scale = std::max(std::abs(rough.value), std::fabs(pt.rhs));
      double x0 = 1e-2;
      while (x0 > 1e-14 && psi.head_bound(x0, sigma) > 1e-2 * reltol * scale) x0 /= 2;
      pt.x0 = x0;
      pt.head_bound = psi.head_bound(x0, sigma);
      auto r = integrate_exp_sinh(integrand, x0, opt);
      pt.lhs = r.value.real();
      pt.quad_error = r.abs_error_estimate + pt.head_bound;
      pt.converged = r.converged && all_terms_ok && pt.head_bound <= reltol * scale;
      pt.rel_error = std::fabs(pt.lhs - pt.rhs) / std::fabs(pt.rhs);
      out.push_back(pt);
    }
  }
  return out;
}

}  // namespace linezero::special
