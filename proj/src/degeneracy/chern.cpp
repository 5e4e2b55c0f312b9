#include "tautcalc/degeneracy.hpp"

namespace tautcalc::degeneracy {

using ring::TautMonomial;

namespace {

void require_index(int i, const DegeneracyProblem& prob) {
  if (i < 0 || i > prob.r) {
    throw DomainError("index i = " + std::to_string(i) + " outside 0.." + std::to_string(prob.r));
  }
}

}  // namespace

TautClass divisor_class_D(int i, const DegeneracyProblem& prob) {
  require_index(i, prob);
  const auto sig = prob.triple_ring();
  TautClass d = TautClass::eta(sig, 1) * Rational(prob.m + 2 * i);
  d += (TautClass::eta(sig, 2) + TautClass::eta(sig, 3)) * Rational(i);
  d += (TautClass::gamma(sig, 1, 2) + TautClass::gamma(sig, 1, 3)) * Rational(i);
  return d;
}

ChernSeries chern_character_Mi(int i, const DegeneracyProblem& prob) {
  require_index(i, prob);
  const auto sig = prob.triple_ring();
  const auto one = TautClass::one(sig);
  const auto eta1 = TautClass::eta(sig, 1);

  TautClass ch_l = one + eta1 * Rational(prob.g + prob.r + prob.m) + TautClass::gamma(sig, 1, 4) -
                   eta1 * TautClass::theta(sig);
  TautClass ch_o = one - ring::exp_nilpotent(-divisor_class_D(i, prob), sig.top_degree());
  TautClass todd = one + eta1 * Rational(1 - prob.g);
  return ChernSeries::from_class(ring::pushforward_factor1(todd * ch_l * ch_o));
}

ChernSeries chern_classes_from_character(const ChernSeries& ch, int top) {
  if (top < 1) throw DomainError("Chern class cap must be >= 1");
  ChernSeries c{ch.signature, {TautClass::one(ch.signature)}};
  for (int n = 1; n <= top; ++n) {
    TautClass acc(ch.signature);
    for (int k = 1; k <= n; ++k) {
      const TautClass ch_k = ch.piece(k);
      if (ch_k.is_zero()) continue;
      Rational weight(factorial(k));
      if (k % 2 == 0) weight = -weight;
      acc += (ch_k * c.pieces[static_cast<std::size_t>(n - k)]) * weight;
    }
    acc *= make_rational(1, n);
    c.pieces.push_back(std::move(acc));
  }
  return c;
}

}  // namespace tautcalc::degeneracy
