#pragma once

#include <vector>

#include "tautcalc/exact.hpp"

namespace tautcalc {

/// Power series in one variable with exact coefficients, truncated after an
/// explicit degree cap. Arithmetic between two series keeps the smaller cap.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int cap);
  TruncatedSeries(int cap, std::vector<Rational> coefficients);

  static TruncatedSeries constant(int cap, const Rational& c);

  /// (1 + scale*x)^alpha through the binomial series.
  static TruncatedSeries binomial_series(int cap, const Rational& alpha, const Rational& scale);

  int cap() const { return cap_; }
  const Rational& operator[](int degree) const { return coeffs_.at(static_cast<std::size_t>(degree)); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Divides by x. The constant term must vanish; the cap drops by one.
  TruncatedSeries divide_by_x() const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& scalar);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  void truncate_to(int cap);

  int cap_;
  std::vector<Rational> coeffs_;
};

}  // namespace tautcalc
