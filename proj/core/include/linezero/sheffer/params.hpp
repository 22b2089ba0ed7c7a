#pragma once

#include <string>
#include <vector>

#include "linezero/series/rational.hpp"

namespace linezero::sheffer {

using series::Rational;

// Family parameters alpha_0..alpha_N, p_1..p_N, p, p*. Construction validates
// alpha_0 != 0 and |alpha_0| < |alpha_1| < ... < |alpha_N|; c = (p* - p)/2.
class ParamSet {
 public:
  ParamSet(std::vector<Rational> alpha, std::vector<Rational> pexp, Rational p, Rational pstar);
  // N = 0, alpha_0 = 1.
  static ParamSet basic(const Rational& p, const Rational& pstar);

  const std::vector<Rational>& alpha() const { return alpha_; }
  const std::vector<Rational>& pexp() const { return pexp_; }
  const Rational& p() const { return p_; }
  const Rational& pstar() const { return pstar_; }
  const Rational& c() const { return c_; }
  size_t N() const { return pexp_.size(); }

  // alpha_i / alpha_0 for i = 1..N (the substitution z -> z/alpha_0).
  std::vector<Rational> normalized_alpha() const;

  std::string describe() const;

 private:
  std::vector<Rational> alpha_;
  std::vector<Rational> pexp_;
  Rational p_, pstar_, c_;
};

}  // namespace linezero::sheffer
