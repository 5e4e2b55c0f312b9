#include <vector>

#include "tautcalc/combinatorics.hpp"
#include "tautcalc/degeneracy.hpp"

namespace tautcalc::degeneracy {

using ring::TautMonomial;

namespace {

// The generators of C x C x Pic that the closed forms are written in.
struct PairRing {
  explicit PairRing(const DegeneracyProblem& prob) : sig(prob.pair_ring()) {}

  TautClass eta() const { return TautClass::eta(sig, 2) + TautClass::eta(sig, 3); }
  TautClass gamma() const { return TautClass::gamma(sig, 2, 4) + TautClass::gamma(sig, 3, 4); }
  TautClass eta23() const { return TautClass::eta(sig, 2) * TautClass::eta(sig, 3); }
  TautClass gamma23() const { return TautClass::gamma(sig, 2, 3); }
  TautClass gamma_pair() const { return TautClass::gamma(sig, 2, 4) * TautClass::gamma(sig, 3, 4); }
  // eta_2 gamma_34 + eta_3 gamma_24
  TautClass mixed() const {
    return TautClass::eta(sig, 2) * TautClass::gamma(sig, 3, 4) +
           TautClass::eta(sig, 3) * TautClass::gamma(sig, 2, 4);
  }
  TautClass theta() const { return TautClass::theta(sig); }

  RingSignature sig;
};

// r + 1 + ig - 2i, the recurring linear factor.
Rational twist_factor(int i, const DegeneracyProblem& prob) {
  return Rational(prob.r + 1 + i * prob.g - 2 * i);
}

void require_index(int i, const DegeneracyProblem& prob) {
  if (i < 0 || i > prob.r) throw DomainError("index i out of range");
}

}  // namespace

TautClass printed_ch(int degree, int i, const DegeneracyProblem& prob) {
  require_index(i, prob);
  const PairRing x(prob);
  const Rational ii(i);
  const Rational i2 = ii * ii;
  switch (degree) {
    case 0:
      return TautClass(x.sig, Rational(prob.m + 2 * i));
    case 1:
      return x.eta() * (ii * twist_factor(i, prob)) + x.gamma() * ii - x.gamma23() * i2;
    case 2:
      return x.eta() * x.theta() * (-ii) +
             x.eta23() * (i2 * (2 * i - prob.r - 1 - 2 * i * prob.g)) - x.mixed() * i2;
    case 3:
      return x.eta23() * x.theta() * i2;
    default:
      throw DomainError("printed ch is given in degrees 0..3");
  }
}

TautClass printed_c2(int i, const DegeneracyProblem& prob, FormulaVariant variant) {
  require_index(i, prob);
  const PairRing x(prob);
  const Rational ii(i);
  const Rational i2 = ii * ii;
  const Rational a = twist_factor(i, prob);
  const Rational g_term =
      variant == FormulaVariant::kLiteral ? Rational(prob.g * i2 * i2) : Rational(prob.g * i2);
  const Rational bracket = a * a - g_term + 2 * ii * prob.g + prob.r + 1 - 2 * ii;
  return x.eta23() * (i2 * bracket) + x.mixed() * (i2 * (prob.r + 2 + ii * prob.g - 3 * ii)) +
         x.eta() * x.theta() * (ii - i2) + x.gamma_pair() * i2;
}

TautClass printed_c3(int i, const DegeneracyProblem& prob, FormulaVariant variant) {
  require_index(i, prob);
  const PairRing x(prob);
  const Rational ii(i);
  const Rational i2 = ii * ii;
  const Rational a = twist_factor(i, prob);
  const Rational tail = variant == FormulaVariant::kLiteral ? 1 : 2;
  const Rational bracket = 2 * (1 - ii) * a - 4 * ii + 2 * i2 + tail;
  TautClass out = x.eta23() * x.theta() * (i2 * bracket);
  if (variant == FormulaVariant::kCorrected) out -= x.mixed() * x.theta() * (i2 * (ii - 1));
  return out;
}

TautClass printed_twisted_c1(int i, const DegeneracyProblem& prob) {
  require_index(i, prob);
  const PairRing x(prob);
  const Rational ii(i);
  const Rational i2 = ii * ii;
  return x.eta() * (i2 * (prob.g - 2) + ii * (prob.r + 1)) + x.gamma() * ii - x.gamma23() * i2 +
         x.theta();
}

TautClass simplified_c(int k, int i, const DegeneracyProblem& prob) {
  require_index(i, prob);
  const PairRing x(prob);
  const Rational ii(i);
  const Rational i2 = ii * ii;
  switch (k) {
    case 0:
      return TautClass::one(x.sig);
    case 1:
      return x.eta() * (ii * twist_factor(i, prob)) + x.gamma() * ii - x.gamma23() * i2;
    case 2:
      return x.eta() * x.theta() * (ii - i2) + x.gamma_pair() * i2;
    default:
      if (k < 0) throw DomainError("negative Chern degree");
      return TautClass(x.sig);
  }
}

namespace {

// V of (0, 2, ..., 2r) with the listed positions lowered by one.
Rational lowered_v(int r, std::vector<int> positions) {
  const IntSequence seq = lowered_even_sequence(r, positions);
  return vandermonde_v(seq);
}

// Sum over i of weight(i) V(... 2i-1 ...) plus pair_weight times the sum
// over i1 < i2 of i1 i2 V(... 2i1-1 ... 2i2-1 ...), scaled by g!.
template <class Weight>
Rational vandermonde_sum(const DegeneracyProblem& prob, Weight single, const Rational& pair_weight) {
  Rational sum(0);
  for (int i = 0; i <= prob.r; ++i) sum += single(Rational(i)) * lowered_v(prob.r, {i});
  for (int i1 = 0; i1 <= prob.r; ++i1) {
    for (int i2 = i1 + 1; i2 <= prob.r; ++i2) {
      sum += pair_weight * (i1 * i2) * lowered_v(prob.r, {i1, i2});
    }
  }
  return sum * Rational(factorial(prob.g));
}

}  // namespace

Rational n_combinatorial(const DegeneracyProblem& prob) {
  const int g = prob.g;
  const int r = prob.r;
  auto single = [g, r](const Rational& i) -> Rational {
    return 2 * (i * i * (g - 2) + i * (r + 1) + i * i * g);
  };
  return vandermonde_sum(prob, single, Rational(-8));
}

Rational point_slice_breakdown(const DegeneracyProblem& prob) {
  const int g = prob.g;
  const int r = prob.r;
  auto single = [g, r](const Rational& i) -> Rational { return i * i * (g - 2) + i * (r + 1); };
  return vandermonde_sum(prob, single, Rational(-2));
}

std::vector<FormulaCheck> ring_cross_check(const FpEngine& engine, FormulaVariant variant) {
  const auto& prob = engine.problem();
  std::vector<FormulaCheck> out;
  for (int i = 0; i <= prob.r; ++i) {
    const auto& ch = engine.chern_character(i);
    const auto& c = engine.chern_classes(i);
    for (int k = 0; k <= 3; ++k) {
      out.push_back({i, "ch" + std::to_string(k), ch.piece(k), printed_ch(k, i, prob)});
    }
    out.push_back({i, "c2", c.piece(2), printed_c2(i, prob, variant)});
    out.push_back({i, "c3", c.piece(3), printed_c3(i, prob, variant)});
  }
  return out;
}

}  // namespace tautcalc::degeneracy
