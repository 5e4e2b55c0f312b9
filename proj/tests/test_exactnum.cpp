#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tautcalc/combinatorics.hpp"
#include "tautcalc/determinant.hpp"
#include "tautcalc/exact.hpp"
#include "tautcalc/series.hpp"

using namespace tautcalc;

namespace {

// Pascal's triangle, rows 0..n.
std::vector<std::vector<Integer>> pascal(int n) {
  std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    rows[i].assign(static_cast<std::size_t>(i) + 1, Integer(1));
    for (int k = 1; k < i; ++k) rows[i][k] = rows[i - 1][k - 1] + rows[i - 1][k];
  }
  return rows;
}

// det(1/(b_i - j)!) by permutation expansion.
Rational vandermonde_by_det(const IntSequence& b) {
  Matrix<Rational> m(b.size(), std::vector<Rational>(b.size()));
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) m[i][j] = inverse_factorial(b[i] - static_cast<long>(j));
  }
  return leibniz_det(m, Rational(0), Rational(1));
}

}  // namespace

TEST_CASE("rationals stay in lowest terms with a positive denominator") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-100000, 100000);
  for (int trial = 0; trial < 500; ++trial) {
    long num = dist(rng);
    long den = dist(rng);
    if (den == 0) den = 1;
    const Rational q = make_rational(num, den);
    CHECK(q.get_den() > 0);
    Integer gcd;
    mpz_gcd(gcd.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    CHECK(gcd == 1);
    CHECK(parse_rational(to_string(q)) == q);
    if (q != 0) CHECK(q * (1 / q) == 1);
  }
}

TEST_CASE("rational formatting and parsing") {
  CHECK(to_string(make_rational(6, 4)) == "3/2");
  CHECK(to_string(make_rational(-6, 3)) == "-2");
  CHECK(to_string(make_rational(3, -9)) == "-1/3");
  CHECK(parse_rational("-14/21") == make_rational(-2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
}

TEST_CASE("factorials and binomials agree with Pascal's triangle") {
  const auto rows = pascal(60);
  for (int n = 0; n <= 60; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == Rational(rows[n][k]));
    CHECK(binomial(n, n + 1) == 0);
    CHECK(binomial(n, -1) == 0);
  }
  Integer f(1);
  for (int n = 1; n <= 40; ++n) {
    f *= n;
    CHECK(factorial(n) == f);
  }
  CHECK(inverse_factorial(-3) == 0);
  CHECK(binomial(make_rational(1, 2), 2) == make_rational(-1, 8));
  CHECK(pow2(-3) == make_rational(1, 8));
}

TEST_CASE("Vandermonde value matches det(1/(b_i - j)!)") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int len = 1 + static_cast<int>(rng() % 5);
    IntSequence b;
    for (int i = 0; i < len; ++i) b.push_back(static_cast<long>(rng() % 12) - 1);
    CHECK(vandermonde_v(b) == vandermonde_by_det(b));
  }
  const IntSequence evens = {0, 2, 4};
  CHECK(vandermonde_v(evens) == make_rational(2 * 4 * 2, 2 * 24));
  CHECK(lowered_even_sequence(3, std::vector<int>{1, 3}) == IntSequence{0, 1, 4, 5});
}

TEST_CASE("power-sum identities for r in 1..50") {
  for (int r = 1; r <= 50; ++r) {
    for (int p = 1; p <= 3; ++p) CHECK(check_identity_power_sum(r, p));
  }
  CHECK(power_sum_lhs(2, 1) == 12);  // 6 + 6
  CHECK_THROWS_AS(power_sum_closed_form(3, 4), DomainError);
}

TEST_CASE("master and final identities") {
  for (int r = 3; r <= 40; ++r) CHECK(check_master_identity_sigma(r));
  for (int r = 1; r <= 40; ++r) CHECK(check_final_identity(r));
  CHECK(final_identity_lhs(3) == 2 * 3 * 4 * 5 * 32 / 16);
}

TEST_CASE("Catalan series against the convolution recurrence") {
  const auto c = catalan_series(100);
  std::vector<Integer> rec = {Integer(1)};
  for (int n = 0; n < 100; ++n) {
    Integer next(0);
    for (int i = 0; i <= n; ++i) next += rec[i] * rec[n - i];
    rec.push_back(next);
  }
  for (int n = 0; n <= 100; ++n) CHECK(c[n] == Rational(rec[n]));
  CHECK(catalan_series_check(100));
}

TEST_CASE("truncated series arithmetic") {
  const auto root = TruncatedSeries::binomial_series(12, make_rational(1, 2), Rational(1));
  const auto square = root * root;
  CHECK(square[0] == 1);
  CHECK(square[1] == 1);
  for (int k = 2; k <= 12; ++k) CHECK(square[k] == 0);
}

TEST_CASE("n closed form, frozen values") {
  CHECK(n_closed_form(2) == 6);
  CHECK(n_closed_form(3) == 240);
  CHECK(n_closed_form(4) == 34560);
  CHECK(n_closed_form(5) == 30750720);
  CHECK(factorial_ratio_product(3) == make_rational(1 * 2 * 6, 2 * 24 * 720));
}

TEST_CASE("exact linear solve") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    std::vector<Rational> b(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a[i][j] = make_rational(static_cast<long>(rng() % 21) - 10, 1 + rng() % 4);
      a[i][i] += 50;  // diagonally dominant, so nonsingular
      b[i] = make_rational(static_cast<long>(rng() % 41) - 20, 1 + rng() % 3);
    }
    const auto x = solve_linear(a, b);
    for (std::size_t i = 0; i < n; ++i) {
      Rational row(0);
      for (std::size_t j = 0; j < n; ++j) row += a[i][j] * x[j];
      CHECK(row == b[i]);
    }
  }
  CHECK_THROWS_AS(solve_linear({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}, {Rational(1), Rational(2)}),
                  DomainError);
}
