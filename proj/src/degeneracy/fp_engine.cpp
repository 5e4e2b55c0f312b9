#include "tautcalc/degeneracy.hpp"

namespace tautcalc::degeneracy {

using ring::TautMonomial;

namespace {

bool survives_pairing(const TautMonomial& m, const RingSignature& sig) {
  for (const auto& probe : {TautMonomial::eta(2), TautMonomial::eta(3), TautMonomial::gamma(2, 3)}) {
    auto product = ring::multiply_monomials(m, probe, sig.genus);
    if (product && !ring::vanishes_in(product->monomial, sig)) return true;
  }
  return false;
}

TautClass theta_power_over_factorial(const RingSignature& sig, int k) {
  if (k < 0) return TautClass(sig);
  return TautClass::monomial(sig, TautMonomial::theta_power(k), inverse_factorial(k));
}

}  // namespace

FpEngine::FpEngine(DegeneracyProblem prob, FpOptions options)
    : prob_(prob), options_(options) {
  if (options_.threads < 1) throw DomainError("thread count must be >= 1");
  const int top = 2 * prob_.r + 2;
  for (int i = 0; i <= prob_.r; ++i) {
    ch_.push_back(chern_character_Mi(i, prob_));
    c_.push_back(chern_classes_from_character(ch_.back(), top));
  }
}

TautClass FpEngine::reduce(const TautClass& x) const {
  if (options_.mode == EntryMode::kFull) return x;
  const auto sig = x.signature();
  return x.filtered([&sig](const TautMonomial& m) { return survives_pairing(m, sig); });
}

TautClass FpEngine::twisted_entry(int i, int j) const {
  const auto sig = prob_.pair_ring();
  TautClass out(sig);
  if (i < 0 || i > prob_.r) throw DomainError("twisted entry index out of range");
  const auto& c = c_[static_cast<std::size_t>(i)];
  for (int k = 0; k <= j; ++k) {
    const TautClass ck = c.piece(k);
    if (ck.is_zero()) continue;
    out += ck * theta_power_over_factorial(sig, j - k);
  }
  return reduce(out);
}

Matrix<TautClass> FpEngine::matrix() const {
  Matrix<TautClass> a;
  for (int i = 0; i <= prob_.r; ++i) {
    std::vector<TautClass> row;
    for (int j = 0; j <= prob_.r; ++j) row.push_back(twisted_entry(i, 2 * i - j));
    a.push_back(std::move(row));
  }
  return a;
}

TautClass FpEngine::determinant() const {
  const auto sig = prob_.pair_ring();
  return minor_expansion_det(matrix(), TautClass(sig), TautClass::one(sig), options_.threads);
}

TautClass FpEngine::leibniz_determinant() const {
  const auto sig = prob_.pair_ring();
  return leibniz_det(matrix(), TautClass(sig), TautClass::one(sig));
}

TautClass twisted_entry(int i, int j, const DegeneracyProblem& prob) {
  return FpEngine(prob).twisted_entry(i, j);
}

TautClass fp_determinant(const DegeneracyProblem& prob, FpOptions options) {
  return FpEngine(prob, options).determinant();
}

namespace {

Rational pair_with(const TautClass& det, int g, const TautClass& cycle) {
  if (det.signature().curve_factors != 2 || det.signature().genus != g) {
    throw ring::SignatureMismatch("determinant is not a class on C x C x Pic in genus " +
                                  std::to_string(g));
  }
  return ring::integrate(det * cycle);
}

}  // namespace

Rational intersect_diagonal(const TautClass& det, int g) {
  const auto sig = RingSignature::make(2, g);
  return pair_with(det, g,
                   TautClass::eta(sig, 2) + TautClass::gamma(sig, 2, 3) + TautClass::eta(sig, 3));
}

Rational intersect_point_slice(const TautClass& det, int g) {
  return pair_with(det, g, TautClass::eta(RingSignature::make(2, g), 2));
}

Rational intersect_point_slice_second(const TautClass& det, int g) {
  return pair_with(det, g, TautClass::eta(RingSignature::make(2, g), 3));
}

Rational intersect_gamma23(const TautClass& det, int g) {
  return pair_with(det, g, TautClass::gamma(RingSignature::make(2, g), 2, 3));
}

Rational gamma_pair_term(const DegeneracyProblem& prob) {
  const FpEngine engine(prob);
  const auto sig = prob.pair_ring();
  const auto pair_mask = TautMonomial::gamma(2, 4).gamma_mask() | TautMonomial::gamma(3, 4).gamma_mask();
  auto keep = [pair_mask](const TautMonomial& m) {
    return m.eta_mask() == 0 && (m.gamma_mask() == 0 || m.gamma_mask() == pair_mask);
  };
  Matrix<TautClass> a = engine.matrix();
  for (auto& row : a) {
    for (auto& entry : row) entry = entry.filtered(keep);
  }
  const TautClass det = minor_expansion_det(a, TautClass(sig), TautClass::one(sig));
  return intersect_gamma23(det, prob.g);
}

Matrix<Rational> theta_pure_matrix(int r) {
  if (r < 0) throw DomainError("theta-pure matrix needs r >= 0");
  Matrix<Rational> a(static_cast<std::size_t>(r) + 1);
  for (int i = 0; i <= r; ++i) {
    for (int j = 0; j <= r; ++j) a[i].push_back(inverse_factorial(2L * i - j));
  }
  return a;
}

Rational theta_pure_determinant(int r, int threads) {
  return minor_expansion_det(theta_pure_matrix(r), Rational(0), Rational(1), threads);
}

}  // namespace tautcalc::degeneracy
