#pragma once

#include <vector>

#include "linezero/roots/aberth.hpp"
#include "linezero/sheffer/params.hpp"

namespace linezero::roots {

using sheffer::ParamSet;

struct LineCheck {
  unsigned n = 0;
  RootReport report;
  // Allowed number of off-line zeros: 0 when p + p* <= 0, else 2 ceil(c + p).
  long allowed_offline = 0;
  bool holds = false;
};

long allowed_offline(const ParamSet& params);

// Roots of h_n classified against Re(s) = c. A violated claim is recorded in
// `holds`, never thrown.
LineCheck verify_line(const ParamSet& params, unsigned n, long precision_bits = 0, double tau_line = 1e-10);
// Same for one precomputed polynomial (h_n from a table).
LineCheck verify_line_poly(const ParamSet& params, const SPoly& h, unsigned n, long precision_bits = 0,
                           double tau_line = 1e-10);

// i^n q_n(c + i s), which has real coefficients.
struct HatPoly {
  SPoly poly;
};
HatPoly hat_poly(unsigned n, const Rational& p, const Rational& pstar);
// Same construction applied to an arbitrary q with symmetry centre c.
HatPoly hat_of(const SPoly& q, unsigned n, const Rational& c);

struct InterlaceReport {
  unsigned n = 0;
  std::vector<double> lower;  // sorted real roots of hat q_n
  std::vector<double> upper;  // sorted real roots of hat q_{n+1}
  double max_imag = 0;        // largest |Im| seen, relative to max(1, |root|)
  bool interlaced = false;
};

// Requires p + p* <= 0. Throws DomainError on that, and when a hat root is
// not real within tau_line.
InterlaceReport interlace_report(unsigned n, const Rational& p, const Rational& pstar, long precision_bits = 0,
                                 double tau_line = 1e-10);
bool interlace_check(unsigned n, const Rational& p, const Rational& pstar, long precision_bits = 0);

}  // namespace linezero::roots
