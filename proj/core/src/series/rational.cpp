#include "linezero/series/rational.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <vector>

#include "linezero/error.hpp"

namespace linezero::series {

namespace {

constexpr unsigned kCachedFactorials = 200;

const std::vector<Integer>& factorial_table() {
  static const std::vector<Integer> table = [] {
    std::vector<Integer> t(kCachedFactorials + 1);
    t[0] = 1;
    for (unsigned i = 1; i <= kCachedFactorials; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw DomainError("malformed rational: '" + std::string(whole) + "'");
  Integer z(std::string(s), 10);
  return neg ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw DomainError("malformed rational: empty string");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(s.substr(0, slash), text);
    std::string_view den_text = s.substr(slash + 1);
    if (!all_digits(den_text)) throw DomainError("malformed rational: '" + std::string(text) + "'");
    Integer den(std::string(den_text), 10);
    if (den == 0) throw DomainError("malformed rational: zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.remove_prefix(1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw DomainError("malformed rational: '" + std::string(text) + "'");
    std::string digits = std::string(whole) + std::string(frac);
    Integer num(digits, 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational q(neg ? Integer(-num) : num, den);
    q.canonicalize();
    return q;
  }

  return Rational(parse_integer(s, text));
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

const Integer& factorial(unsigned n) {
  if (n <= kCachedFactorials) return factorial_table()[n];
  // Rare path; keep a growable overflow cache guarded by a mutex.
  static std::mutex mu;
  static std::deque<Integer> extra;  // deque: references stay valid on growth
  std::lock_guard lock(mu);
  const auto& base = factorial_table();
  while (extra.size() < n - kCachedFactorials) {
    const Integer& prev = extra.empty() ? base.back() : extra.back();
    extra.push_back(prev * static_cast<unsigned long>(kCachedFactorials + extra.size() + 1));
  }
  return extra[n - kCachedFactorials - 1];
}

Integer factorial_big(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational falling(const Rational& x, unsigned k) {
  Rational r = 1;
  for (unsigned j = 0; j < k; ++j) r *= x - j;
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational pow(const Rational& q, unsigned k) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), k);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), k);
  return r;
}

}  // namespace linezero::series
