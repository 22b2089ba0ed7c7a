#include "linezero/asymptotics/saddle.hpp"

#include <cmath>

#include "linezero/error.hpp"

namespace linezero::asymptotics {

namespace {
const cplx I{0, 1};

void check_branch_points(cplx z) {
  constexpr double eps = 1e-14;
  if (std::abs(z) < eps || std::abs(z - 1.0) < eps || std::abs(z + 1.0) < eps)
    throw DomainError("phi: z too close to a branch point (0 or +-1)");
}
}  // namespace

double FloatParams::growth() const {
  double g = p0();
  for (double e : pexp) g += e;
  return g;
}

FloatParams FloatParams::from(const sheffer::ParamSet& params) {
  FloatParams fp;
  fp.p = params.p().get_d();
  fp.pstar = params.pstar().get_d();
  fp.alpha0 = params.alpha()[0].get_d();
  for (const auto& b : params.normalized_alpha()) fp.beta.push_back(b.get_d());
  for (const auto& e : params.pexp()) fp.pexp.push_back(e.get_d());
  return fp;
}

FloatParams FloatParams::basic(double p, double pstar) {
  FloatParams fp;
  fp.p = p;
  fp.pstar = pstar;
  return fp;
}

cplx phi_only(cplx z, double t) {
  check_branch_points(z);
  return I * t * (std::log(1.0 + z) - std::log(1.0 - z)) - std::log(z);
}

cplx phi_z_only(cplx z, double t) {
  check_branch_points(z);
  return -1.0 / z + I * t / (1.0 - z) + I * t / (1.0 + z);
}

PhiValues phi_eval(cplx z, double t, const FloatParams& fp) {
  check_branch_points(z);
  const cplx lp = std::log(1.0 + z), lm = std::log(1.0 - z), lz = std::log(z);
  const cplx a = 1.0 / z, bm = 1.0 / (1.0 - z), bp = 1.0 / (1.0 + z);
  PhiValues v;
  v.phi = I * t * (lp - lm) - lz;
  v.phi_z = -a + I * t * (bm + bp);
  v.phi_zz = a * a + I * t * (bm * bm - bp * bp);
  v.phi_zzz = -2.0 * a * a * a + 2.0 * I * t * (bm * bm * bm + bp * bp * bp);
  // (1-z)^{p0} (1+z)^{p0} as separate principal powers, matching the Cauchy integrand.
  v.log_psi = -lz + fp.p0() * (lm + lp);
  for (size_t i = 0; i < fp.beta.size(); ++i) {
    const cplx w = 1.0 - fp.beta[i] * fp.beta[i] * z * z;
    if (std::abs(w) < 1e-300) throw DomainError("psi: z at a zero of 1 - alpha_i^2 z^2");
    v.log_psi += fp.pexp[i] * std::log(w);
  }
  return v;
}

SaddleData saddle_point(double t) {
  if (!(t > 0 && t < 1)) throw DomainError("saddle_point: t must lie in (0,1)");
  SaddleData s;
  s.t = t;
  s.zeta = cplx(std::sqrt((1 - t) * (1 + t)), -t);
  PhiValues v = phi_eval(s.zeta, t, FloatParams{});
  s.phi_at = v.phi;
  s.phi_z_at = v.phi_z;
  s.phi_zz_at = v.phi_zz;
  s.phi_zzz_at = v.phi_zzz;
  if (std::abs(std::abs(s.zeta) - 1) > 1e-14) throw CrossCheckError("saddle_point: |zeta| != 1");
  if (std::abs(s.phi_z_at) > 1e-12) throw CrossCheckError("saddle_point: phi_z(zeta) not zero");
  if (!(s.phi_zz_at.real() > 0)) throw CrossCheckError("saddle_point: Re phi_zz(zeta) <= 0");
  return s;
}

cplx phi_t_at_saddle(double t) {
  const cplx z = saddle_point(t).zeta;
  return I * (std::log(1.0 + z) - std::log(1.0 - z));
}

}  // namespace linezero::asymptotics
