#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace solvable {

// Canonical arbitrary-precision rational (gcd-reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

// Accepts "p", "p/q", optional sign, and finite decimals such as "2.5".
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

bool is_integer(const Rational& r);

// Greatest integer strictly less than a (integer a maps to a - 1).
Integer floor_prime(const Rational& a);

Integer floor_of(const Rational& a);

// Exact square root when r is the square of a rational.
bool rational_sqrt(const Rational& r, Rational& out);

Rational pow(const Rational& base, long exponent);

Integer factorial(unsigned long n);

Integer binomial(unsigned long n, unsigned long k);

// (a)_n = a (a+1) ... (a+n-1).
Rational pochhammer(const Rational& a, unsigned long n);

int sign(const Rational& r);

}  // namespace solvable
