#include "linezero/roots/line.hpp"

#include <algorithm>
#include <cmath>

#include "linezero/error.hpp"
#include "linezero/sheffer/families.hpp"

namespace linezero::roots {

long allowed_offline(const ParamSet& params) {
  if (params.p() + params.pstar() <= 0) return 0;
  return 2 * series::ceil(params.c() + params.p()).get_si();
}

LineCheck verify_line_poly(const ParamSet& params, const SPoly& h, unsigned n, long precision_bits, double tau_line) {
  LineCheck out;
  out.n = n;
  out.allowed_offline = allowed_offline(params);
  if (h.degree() < 1) {
    out.report.line_c = params.c();
    out.report.tau_line = tau_line;
    out.report.certified = true;
    out.holds = true;
    return out;
  }
  out.report = find_roots_stable(h, precision_bits, params.c(), tau_line);
  out.holds = static_cast<long>(out.report.offline_count) <= out.allowed_offline;
  return out;
}

LineCheck verify_line(const ParamSet& params, unsigned n, long precision_bits, double tau_line) {
  return verify_line_poly(params, sheffer::gen_h(n, params), n, precision_bits, tau_line);
}

HatPoly hat_of(const SPoly& q, unsigned n, const Rational& c) {
  // Expand q(c + i s) = R(s) + i I(s) by Horner over Gaussian-rational polynomials.
  SPoly re, im;
  const auto& a = q.coeffs();
  const SPoly cs = SPoly::constant(c), s = SPoly::linear(0, 1);
  for (size_t k = a.size(); k-- > 0;) {
    SPoly nre = re * cs - im * s;
    SPoly nim = im * cs + re * s;
    re = nre + SPoly::constant(a[k]);
    im = std::move(nim);
  }
  // multiply by i^n
  SPoly real_part, imag_part;
  switch (n % 4) {
    case 0: real_part = re; imag_part = im; break;
    case 1: real_part = -im; imag_part = re; break;
    case 2: real_part = -re; imag_part = -im; break;
    default: real_part = im; imag_part = -re; break;
  }
  if (!imag_part.is_zero())
    throw CrossCheckError("hat polynomial has a nonzero imaginary part at n=" + std::to_string(n) + ": " +
                          imag_part.to_string());
  return {real_part};
}

HatPoly hat_poly(unsigned n, const Rational& p, const Rational& pstar) {
  return hat_of(sheffer::gen_q(n, p, pstar), n, (pstar - p) / 2);
}

namespace {

std::vector<double> real_roots(const SPoly& poly, long bits, double tau, double& max_imag) {
  std::vector<double> r;
  if (poly.degree() < 1) return r;
  auto rep = find_roots_stable(poly, bits, 0, tau);
  for (const auto& z : rep.roots) {
    auto zd = z.to_complex();
    double rel = std::fabs(zd.imag()) / std::max(1.0, std::abs(zd));
    max_imag = std::max(max_imag, rel);
    r.push_back(zd.real());
  }
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace

InterlaceReport interlace_report(unsigned n, const Rational& p, const Rational& pstar, long precision_bits,
                                 double tau_line) {
  if (p + pstar > 0) throw DomainError("interlace_check requires p + p* <= 0");
  InterlaceReport out;
  out.n = n;
  const Rational c = (pstar - p) / 2;
  auto q = sheffer::q_table(n + 1, p, pstar);
  out.lower = real_roots(hat_of(q[n], n, c).poly, precision_bits, tau_line, out.max_imag);
  out.upper = real_roots(hat_of(q[n + 1], n + 1, c).poly, precision_bits, tau_line, out.max_imag);
  if (out.max_imag >= tau_line)
    throw DomainError("hat roots are not real at n=" + std::to_string(n) + " (relative |Im| up to " +
                      std::to_string(out.max_imag) + ")");
  // upper_0 <= lower_0 <= upper_1 <= ... <= lower_{n-1} <= upper_n, weak with a
  // roundoff allowance.
  bool ok = out.upper.size() == out.lower.size() + 1;
  for (size_t k = 0; ok && k < out.lower.size(); ++k) {
    double slack = tau_line * std::max(1.0, std::fabs(out.lower[k]));
    ok = out.upper[k] <= out.lower[k] + slack && out.lower[k] <= out.upper[k + 1] + slack;
  }
  out.interlaced = ok;
  return out;
}

bool interlace_check(unsigned n, const Rational& p, const Rational& pstar, long precision_bits) {
  return interlace_report(n, p, pstar, precision_bits).interlaced;
}

}  // namespace linezero::roots
