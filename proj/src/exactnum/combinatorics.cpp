#include "tautcalc/combinatorics.hpp"

#include <algorithm>

#include "tautcalc/series.hpp"

namespace tautcalc {

Rational vandermonde_v(std::span<const long> b) {
  Integer numerator(1);
  Integer denominator(1);
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (b[k] < 0) return Rational(0);
    for (std::size_t l = 0; l < k; ++l) numerator *= (b[k] - b[l]);
    denominator *= factorial(b[k]);
  }
  return make_rational(numerator, denominator);
}

IntSequence lowered_even_sequence(int r, std::span<const int> lowered_positions) {
  IntSequence seq(static_cast<std::size_t>(r) + 1);
  for (int k = 0; k <= r; ++k) seq[k] = 2L * k;
  for (int pos : lowered_positions) {
    if (pos < 0 || pos > r) throw DomainError("lowered position out of range");
    seq[pos] -= 1;
  }
  return seq;
}

namespace {

// i C(2i-1,i) (r-i+1) C(2r-2i+1,r-i) without the power of i.
Rational pairing_weight(int r, int i) {
  return binomial(2L * i - 1, i) * (r - i + 1) * binomial(2L * r - 2 * i + 1, r - i);
}

}  // namespace

Rational power_sum_lhs(int r, int power) {
  Rational sum(0);
  for (int i = 1; i <= r; ++i) sum += pow(Rational(i), power) * pairing_weight(r, i);
  return sum;
}

Rational power_sum_closed_form(int r, int power) {
  switch (power) {
    case 1:
      return binomial(r + 1, 2) * pow2(2L * r - 2);
    case 2:
      return pow2(2L * r - 2) * binomial(r + 2, 3) + pow2(2L * r - 3) * binomial(r + 1, 3);
    case 3:
      return pow2(2L * r - 2) * binomial(r + 3, 4) + 5 * pow2(2L * r - 3) * binomial(r + 2, 4) +
             pow2(2L * r - 4) * binomial(r + 1, 4);
    default:
      throw DomainError("power must be 1, 2 or 3");
  }
}

bool check_identity_power_sum(int r, int power) {
  if (r < 1) throw DomainError("power-sum identity needs r >= 1");
  return power_sum_lhs(r, power) == power_sum_closed_form(r, power);
}

Rational p_polynomial(int r, int i) {
  const Rational rr(r);
  Rational head = pow(rr, 6) + 3 * pow(rr, 5) - 21 * pow(rr, 4) - 71 * pow(rr, 3) -
                  100 * pow(rr, 2) - 68 * rr;
  head /= 16;
  Rational linear = 6 * pow(rr, 3) + 12 * pow(rr, 2) + 10 * rr + 4;
  Rational quadratic = 6 * pow(rr, 2) + 6 * rr + 4;
  return head + i * linear - Rational(i) * i * quadratic;
}

Rational master_identity_lhs(int r) {
  Rational out = pow2(2L * r - 6) * (Rational(r) * (r + 1) + 2);
  for (int k = r - 2; k <= r + 3; ++k) out *= k;
  return out;
}

Rational master_identity_rhs(int r) {
  Rational sum(0);
  for (int i = 1; i <= r; ++i) sum += i * pairing_weight(r, i) * p_polynomial(r, i);
  return 2 * sum;
}

bool check_master_identity_sigma(int r) {
  if (r < 3) throw DomainError("Sigma identity needs r >= 3");
  return master_identity_lhs(r) == master_identity_rhs(r);
}

Rational final_identity_lhs(int r) {
  Rational out = make_rational(static_cast<long>(r - 1) * r * (r + 1) * (r + 2), 16);
  return out * pow2(2L * r - 1);
}

Rational final_identity_rhs(int r) {
  Rational sum(0);
  for (int i = 0; i <= r; ++i) {
    Rational weight = 4 * pow(Rational(i), 3) - 2 * Rational(i) * i * (r + 1);
    sum += weight * pairing_weight(r, i);
  }
  return sum;
}

bool check_final_identity(int r) {
  if (r < 1) throw DomainError("final identity needs r >= 1");
  return final_identity_lhs(r) == final_identity_rhs(r);
}

std::vector<Rational> catalan_series(int degree) {
  if (degree < 0) throw DomainError("degree must be non-negative");
  // sqrt(1 - 4x) to one order beyond what survives the division by x.
  auto root = TruncatedSeries::binomial_series(degree + 1, make_rational(1, 2), Rational(-4));
  auto numerator = TruncatedSeries::constant(degree + 1, Rational(1)) - root;
  auto quotient = numerator.divide_by_x() * make_rational(1, 2);
  return quotient.coefficients();
}

bool catalan_series_check(int degree) {
  auto coeffs = catalan_series(degree);
  for (int i = 0; i <= degree; ++i) {
    Rational expected = make_rational(factorial(2L * i), factorial(i) * factorial(i + 1L));
    if (coeffs[i] != expected) return false;
  }
  return true;
}

Rational factorial_ratio_product(int r) {
  Rational out(1);
  for (int i = 1; i <= r; ++i) out *= make_rational(factorial(i), factorial(2L * i));
  return out;
}

Rational n_closed_form(int r) {
  if (r < 1) throw DomainError("n needs r >= 1");
  const long h = static_cast<long>(r) * (r + 1) / 2 - 1;
  const long rl = r;
  Rational out(factorial(h));
  out *= pow2(rl * (rl + 1) / 2);
  out *= factorial_ratio_product(r);
  out *= make_rational((rl - 1) * rl * rl * (rl + 1) * (rl + 1) * (rl + 2), 16);
  return out;
}

std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DomainError("dimension mismatch in linear solve");
  for (const auto& row : a) {
    if (row.size() != n) throw DomainError("linear solve needs a square matrix");
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw DomainError("singular linear system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      b[row] -= factor * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace tautcalc
