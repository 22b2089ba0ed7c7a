#pragma once

#include <vector>

#include "linezero/series/zseries.hpp"
#include "linezero/sheffer/params.hpp"

namespace linezero::sheffer {

using series::SPoly;
using series::ZSeries;

// Exponential Riordan array <g, f> with entries n!/k! [z^n] g f^k, all
// computed up front through the common order of g and f. g and f must have
// constant (s-free) coefficients; g(0) != 0, f(0) = 0, f'(0) != 0.
class RiordanMatrix {
 public:
  RiordanMatrix(ZSeries g, ZSeries f);

  unsigned order() const { return g_.order(); }
  const ZSeries& g() const { return g_; }
  const ZSeries& f() const { return f_; }
  Rational entry(unsigned n, unsigned k) const;

  // g(z) b(f(z)); the EGF image of the sequence whose EGF is b.
  ZSeries apply(const ZSeries& b) const;
  // Matrix-vector product on a sequence x_0..x_order (EGF coefficients).
  std::vector<SPoly> apply_sequence(const std::vector<SPoly>& x) const;
  // <g, f> <u, v> = <g u(f), v(f)>
  RiordanMatrix product(const RiordanMatrix& rhs) const;

 private:
  ZSeries g_, f_;
  std::vector<std::vector<Rational>> entries_;  // lower triangle, row n has n+1 entries
};

Rational riordan_entry(const ZSeries& g, const ZSeries& f, unsigned n, unsigned k);
ZSeries riordan_apply(const ZSeries& g, const ZSeries& f, const ZSeries& b);

// <prod_i G_i, z> and the EGF G_0 e^{s f} of q_n (alpha_0 normalized to 1).
ZSeries product_g(const ParamSet& params, unsigned order);
ZSeries q_egf(const ParamSet& params, unsigned order);
// f(z) = log((1 - z)/(1 + z))
ZSeries log_ratio_f(unsigned order);

}  // namespace linezero::sheffer
