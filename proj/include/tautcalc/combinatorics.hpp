#pragma once

#include <span>
#include <vector>

#include "tautcalc/exact.hpp"

namespace tautcalc {

using IntSequence = std::vector<long>;

/// V(b_0, ..., b_r) = prod_{l<k} (b_k - b_l) / prod_j b_j!.
///
/// Entries need not be sorted; an unsorted argument picks up the sign of the
/// sorting permutation, and a repeated entry gives 0. A negative entry also
/// gives 0, matching the convention 1/k! = 0 for k < 0 used by the
/// determinant det(1/(b_i - j)!) that V evaluates.
Rational vandermonde_v(std::span<const long> b);

/// The sequence (0, 2, 4, ..., 2r) with each listed position k lowered by one.
IntSequence lowered_even_sequence(int r, std::span<const int> lowered_positions);

// Sums S_p(r) = sum_{i=1}^r i^p C(2i-1,i) (r-i+1) C(2r-2i+1,r-i) and their
// closed forms for p = 1, 2, 3.
Rational power_sum_lhs(int r, int power);
Rational power_sum_closed_form(int r, int power);
bool check_identity_power_sum(int r, int power);

/// The sextic P(r, i) that weights the sum defining Sigma.
Rational p_polynomial(int r, int i);

Rational master_identity_lhs(int r);
Rational master_identity_rhs(int r);
bool check_master_identity_sigma(int r);

Rational final_identity_lhs(int r);
Rational final_identity_rhs(int r);
bool check_final_identity(int r);

/// Coefficients 0..degree of (1 - sqrt(1-4x)) / (2x), expanded exactly.
std::vector<Rational> catalan_series(int degree);
bool catalan_series_check(int degree);

/// prod_{i=1}^r i!/(2i)!.
Rational factorial_ratio_product(int r);

/// Number of g^r_{g+r} with vanishing (0,2,...,2r) at a general point of a
/// general curve of genus h = r(r+1)/2 - 1:
///   h! 2^{r(r+1)/2} prod i!/(2i)! (r-1) r^2 (r+1)^2 (r+2) / 16.
Rational n_closed_form(int r);

/// Solves A x = b over the rationals by Gaussian elimination.
/// Throws DomainError when A is singular or not square.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace tautcalc
