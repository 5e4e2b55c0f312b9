#include "tautcalc/taut_ring.hpp"

namespace tautcalc::ring {

TautClass exp_nilpotent(const TautClass& x, int degree_cap) {
  if (x.constant_term() != 0) throw DomainError("exp_nilpotent: argument has a degree-0 part");
  if (x.involves_theta()) throw DomainError("exp_nilpotent: argument involves theta");
  auto keep = [degree_cap](const TautMonomial& m) { return m.degree() <= degree_cap; };

  TautClass sum = TautClass::one(x.signature()).filtered(keep);
  TautClass term = TautClass::one(x.signature());
  for (int n = 1; n <= degree_cap; ++n) {
    term = (term * x).filtered(keep);
    term *= make_rational(1, n);
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

TautClass pushforward_factor1(const TautClass& x) {
  const auto& sig = x.signature();
  if (sig.curve_factors != 3) throw DomainError("pushforward_factor1 needs three curve factors");
  TautClass out(RingSignature::make(2, sig.genus));
  for (const auto& [m, c] : x.terms()) {
    // A normal monomial with eta_1 has no gamma_1j; one without eta_1 has
    // an odd class (or nothing) on the fiber and integrates to zero.
    if (m.has_eta(1)) out.add_term(m.without_eta(1), c);
  }
  return out;
}

TautClass pullback_factor1(const TautClass& x) {
  const auto& sig = x.signature();
  if (sig.curve_factors != 2) throw DomainError("pullback_factor1 needs two curve factors");
  return x.with_signature(RingSignature::make(3, sig.genus));
}

Rational integrate(const TautClass& x) {
  const auto& sig = x.signature();
  if (sig.curve_factors != 2) throw DomainError("integrate needs two curve factors");
  const auto top = multiply_monomials(TautMonomial::eta(2), TautMonomial::eta(3), sig.genus);
  Rational out = x.coefficient(top->monomial.with_theta(sig.genus));
  out *= factorial(sig.genus);
  return out;
}

}  // namespace tautcalc::ring
