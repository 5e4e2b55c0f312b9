#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tautcalc {

using Integer = mpz_class;

/// Exact rational. GMP keeps mpq values canonical (lowest terms, positive
/// denominator) as long as they are built through make_rational or arithmetic;
/// never construct one from a raw (num, den) pair without canonicalizing.
using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments of an operation was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// "p/q", or "n" when the value is integral.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "n", "-n", "p/q". Throws DomainError on malformed input.
Rational parse_rational(std::string_view text);

/// n! for n >= 0.
Integer factorial(long n);

/// 1/n!, defined as 0 for n < 0.
Rational inverse_factorial(long n);

/// C(n, k); zero when k < 0, k > n, or n < 0.
Rational binomial(long n, long k);

/// Generalized binomial coefficient alpha (alpha-1) ... (alpha-k+1) / k!.
Rational binomial(const Rational& alpha, long k);

/// 2^e for any integer e.
Rational pow2(long e);

Rational pow(const Rational& base, long e);

}  // namespace tautcalc
