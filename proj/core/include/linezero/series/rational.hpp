#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace linezero::series {

// mpq_class keeps numerator/denominator reduced with a positive denominator
// after every arithmetic operation, which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "a", "a/b", "-a/b" and plain decimals like "0.25" (converted exactly).
Rational parse_rational(std::string_view text);

// n/d reduced to lowest terms (mpq_class's two-argument constructor does not reduce).
inline Rational ratio(const Integer& n, const Integer& d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

// "a" when the denominator is 1, otherwise "a/b".
std::string to_string(const Rational& q);

// n! for n <= 200 comes from a process-wide table built once; larger n are
// computed on demand.
const Integer& factorial(unsigned n);
Integer factorial_big(unsigned n);

// Falling factorial (x)_k = x(x-1)...(x-k+1), (x)_0 = 1.
Rational falling(const Rational& x, unsigned k);

// C(n, k) for natural n, k.
Integer binomial(unsigned n, unsigned k);

// Smallest integer >= q.
Integer ceil(const Rational& q);

Rational pow(const Rational& q, unsigned k);

}  // namespace linezero::series
