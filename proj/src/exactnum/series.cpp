#include "tautcalc/series.hpp"

#include <algorithm>

namespace tautcalc {

TruncatedSeries::TruncatedSeries(int cap) : cap_(cap) {
  if (cap < 0) throw DomainError("series cap must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(cap) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(int cap, std::vector<Rational> coefficients)
    : TruncatedSeries(cap) {
  for (std::size_t i = 0; i < coefficients.size() && i < coeffs_.size(); ++i) {
    coeffs_[i] = std::move(coefficients[i]);
  }
}

TruncatedSeries TruncatedSeries::constant(int cap, const Rational& c) {
  TruncatedSeries s(cap);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::binomial_series(int cap, const Rational& alpha,
                                                 const Rational& scale) {
  TruncatedSeries s(cap);
  Rational scale_power(1);
  for (int k = 0; k <= cap; ++k) {
    s.coeffs_[k] = binomial(alpha, k) * scale_power;
    scale_power *= scale;
  }
  return s;
}

TruncatedSeries TruncatedSeries::divide_by_x() const {
  if (coeffs_[0] != 0) throw DomainError("series has a nonzero constant term");
  if (cap_ == 0) throw DomainError("series cap too small to divide by x");
  TruncatedSeries out(cap_ - 1);
  for (int k = 1; k <= cap_; ++k) out.coeffs_[k - 1] = coeffs_[k];
  return out;
}

void TruncatedSeries::truncate_to(int cap) {
  if (cap < cap_) {
    coeffs_.resize(static_cast<std::size_t>(cap) + 1);
    cap_ = cap;
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  truncate_to(other.cap_);
  for (int k = 0; k <= cap_; ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  truncate_to(other.cap_);
  for (int k = 0; k <= cap_; ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.cap_, b.cap_));
  for (int i = 0; i <= out.cap_; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= out.cap_; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.cap_ == b.cap_ && a.coeffs_ == b.coeffs_;
}

}  // namespace tautcalc
