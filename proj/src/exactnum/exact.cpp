#include "tautcalc/exact.hpp"

#include <cctype>

namespace tautcalc {

Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q{Integer(num), Integer(den)};
  q.canonicalize();
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) throw DomainError("not a rational: " + std::string(text));
    return Rational(parse_integer(text));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw DomainError("not a rational: " + std::string(text));
  }
  return make_rational(parse_integer(num), parse_integer(den));
}

Integer factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative number");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Rational inverse_factorial(long n) {
  if (n < 0) return Rational(0);
  return make_rational(Integer(1), factorial(n));
}

Rational binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return Rational(0);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

Rational binomial(const Rational& alpha, long k) {
  if (k < 0) return Rational(0);
  Rational out(1);
  for (long j = 0; j < k; ++j) {
    out *= (alpha - j);
    out /= (j + 1);
  }
  return out;
}

Rational pow2(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e < 0) return make_rational(Integer(1), p);
  return Rational(p);
}

Rational pow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw DomainError("zero to a negative power");
    return pow(Rational(1) / base, -e);
  }
  Rational out(1);
  for (long i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace tautcalc
