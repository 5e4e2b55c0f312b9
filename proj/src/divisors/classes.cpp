#include <algorithm>

#include "tautcalc/divisors.hpp"

namespace tautcalc::divisors {

namespace {

Coefficient negated(const Coefficient& c) {
  if (!c) return std::nullopt;
  return Rational(-*c);
}

std::string mixed_label(int i, int g) { return std::to_string(i) + ":" + std::to_string(g - i); }

}  // namespace

const Rational& require_known(const Coefficient& c, const std::string& name) {
  if (!c) throw UnknownCoefficient("coefficient " + name + " is not determined");
  return *c;
}

PrymDivisorClass PrymDivisorClass::zero(int g) {
  if (g < 4) throw DomainError("Prym classes need g >= 4");
  PrymDivisorClass x;
  x.g = g;
  x.b.assign(static_cast<std::size_t>(g), Rational(0));
  x.b_mixed.assign(static_cast<std::size_t>(g / 2) + 1, std::nullopt);
  return x;
}

PrymDivisorClass PrymDivisorClass::lambda(int g) {
  PrymDivisorClass x = zero(g);
  x.a = 1;
  return x;
}

PrymDivisorClass PrymDivisorClass::delta(int g, int i) {
  PrymDivisorClass x = zero(g);
  x.b_at(i) = Rational(-1);
  return x;
}

const Coefficient& PrymDivisorClass::b_at(int i) const {
  if (i < 1 || i > g - 1) throw DomainError("delta_i index out of range: " + std::to_string(i));
  return b[static_cast<std::size_t>(i)];
}

Coefficient& PrymDivisorClass::b_at(int i) {
  if (i < 1 || i > g - 1) throw DomainError("delta_i index out of range: " + std::to_string(i));
  return b[static_cast<std::size_t>(i)];
}

const Coefficient& PrymDivisorClass::b_mixed_at(int i) const {
  if (i < 1 || i > g / 2) throw DomainError("delta_{i:g-i} index out of range: " + std::to_string(i));
  return b_mixed[static_cast<std::size_t>(i)];
}

SignedCoordinates PrymDivisorClass::signed_coordinates() const {
  SignedCoordinates out;
  out["lambda"] = a;
  out["delta0p"] = Rational(-b0p);
  out["delta0pp"] = Rational(-b0pp);
  out["delta0ram"] = Rational(-b0ram);
  for (int i = 1; i <= g - 1; ++i) out["delta" + std::to_string(i)] = negated(b_at(i));
  for (int i = 1; i <= g / 2; ++i) out["delta" + mixed_label(i, g)] = negated(b_mixed_at(i));
  return out;
}

std::vector<std::string> PrymDivisorClass::unknown_labels() const {
  std::vector<std::string> out;
  for (int i = 1; i <= g - 1; ++i) {
    if (!b_at(i)) out.push_back(std::to_string(i));
  }
  for (int i = 1; i <= g / 2; ++i) {
    if (!b_mixed_at(i)) out.push_back(mixed_label(i, g));
  }
  return out;
}

SignedCoordinates PointedDivisorClass2::signed_coordinates() const {
  SignedCoordinates out;
  out["psi1"] = a1;
  out["psi2"] = a2;
  out["lambda"] = a;
  out["delta0"] = Rational(-b0);
  for (int i = 0; i < static_cast<int>(b_12.size()); ++i) {
    out["delta" + std::to_string(i) + ",{1,2}"] = Rational(-b_12[static_cast<std::size_t>(i)]);
  }
  for (int i = 1; i < static_cast<int>(b_1.size()); ++i) {
    out["delta" + std::to_string(i) + ",1"] = negated(b_1[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::vector<std::string> PointedDivisorClass2::unknown_labels() const {
  std::vector<std::string> out;
  for (int i = 1; i < static_cast<int>(b_1.size()); ++i) {
    if (!b_1[static_cast<std::size_t>(i)]) out.push_back(std::to_string(i) + ",1");
  }
  return out;
}

SignedCoordinates OnePointedClass::signed_coordinates() const {
  SignedCoordinates out;
  out["psi"] = psi;
  out["lambda"] = lambda;
  for (int i = 0; i < static_cast<int>(delta.size()); ++i) {
    out["delta" + std::to_string(i)] = delta[static_cast<std::size_t>(i)];
  }
  return out;
}

const Rational& Eps0Class::at(int i) const {
  if (i < 2 || i > g - 2) throw DomainError("eps index out of range: " + std::to_string(i));
  return eps[static_cast<std::size_t>(i)];
}

bool Eps0Class::is_zero() const {
  return std::all_of(eps.begin(), eps.end(), [](const Rational& e) { return e == 0; });
}

Eps0Class pullback_to_genus0(const PrymDivisorClass& x) {
  const int g = x.g;
  Eps0Class out;
  out.g = g;
  out.eps.assign(static_cast<std::size_t>(g - 1), Rational(0));
  const Rational& b1 = require_known(x.b_at(1), "delta1");
  const Rational& bl = require_known(x.b_at(g - 1), "delta" + std::to_string(g - 1));
  // lambda, the delta_0 classes and delta_{i:g-i} pull back to zero.
  for (int i = 2; i <= g - 2; ++i) {
    const Rational& bi = require_known(x.b_at(i), "delta" + std::to_string(i));
    Rational from_last = make_rational(static_cast<long>(i - 1) * (g - i), g - 2) * bl;
    Rational from_first =
        make_rational(static_cast<long>(g - i - 1) * (g - i), static_cast<long>(g - 2) * (g - 1)) * b1;
    // The class carries -b_i delta_i; i^* delta_i = eps_i and the two
    // outer classes pull back to minus the sums above.
    out.eps[static_cast<std::size_t>(i)] = -bi + from_last + from_first;
  }
  return out;
}

}  // namespace tautcalc::divisors
