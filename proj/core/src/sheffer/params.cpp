#include "linezero/sheffer/params.hpp"

#include <sstream>

#include "linezero/error.hpp"

namespace linezero::sheffer {

using series::to_string;

ParamSet::ParamSet(std::vector<Rational> alpha, std::vector<Rational> pexp, Rational p, Rational pstar)
    : alpha_(std::move(alpha)), pexp_(std::move(pexp)), p_(std::move(p)), pstar_(std::move(pstar)) {
  if (alpha_.empty()) throw DomainError("alpha list is empty: alpha_0 is required");
  if (sgn(alpha_[0]) == 0)
    throw DomainError("alpha_0 = 0 is degenerate: every h_n reduces to a constant");
  if (pexp_.size() + 1 != alpha_.size())
    throw DomainError("expected " + std::to_string(alpha_.size() - 1) + " exponents p_1..p_N for " +
                      std::to_string(alpha_.size()) + " alpha values, got " + std::to_string(pexp_.size()));
  for (size_t i = 1; i < alpha_.size(); ++i) {
    if (abs(alpha_[i]) <= abs(alpha_[i - 1]))
      throw DomainError("alpha magnitudes must increase strictly: |alpha_" + std::to_string(i) +
                        "| = " + to_string(abs(alpha_[i])) + " is not greater than |alpha_" +
                        std::to_string(i - 1) + "| = " + to_string(abs(alpha_[i - 1])));
  }
  c_ = (pstar_ - p_) / 2;
}

ParamSet ParamSet::basic(const Rational& p, const Rational& pstar) { return ParamSet({Rational(1)}, {}, p, pstar); }

std::vector<Rational> ParamSet::normalized_alpha() const {
  std::vector<Rational> r;
  r.reserve(pexp_.size());
  for (size_t i = 1; i < alpha_.size(); ++i) r.push_back(alpha_[i] / alpha_[0]);
  return r;
}

std::string ParamSet::describe() const {
  std::ostringstream os;
  os << "p=" << to_string(p_) << " pstar=" << to_string(pstar_) << " alpha=[";
  for (size_t i = 0; i < alpha_.size(); ++i) os << (i ? "," : "") << to_string(alpha_[i]);
  os << "] pexp=[";
  for (size_t i = 0; i < pexp_.size(); ++i) os << (i ? "," : "") << to_string(pexp_[i]);
  os << "]";
  return os.str();
}

}  // namespace linezero::sheffer
