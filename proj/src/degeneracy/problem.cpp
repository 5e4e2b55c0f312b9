#include <algorithm>

#include "tautcalc/degeneracy.hpp"

namespace tautcalc::degeneracy {

DegeneracyProblem DegeneracyProblem::make(int r, std::optional<int> m) {
  if (r < 2) throw DomainError("degeneracy problem needs r >= 2");
  if (r > 12) throw DomainError("degeneracy problem supports r <= 12");
  DegeneracyProblem prob;
  prob.r = r;
  prob.g = r * (r + 1) / 2 - 1;
  prob.d = prob.g + r;
  prob.m = m.value_or(prob.g - r);
  if (prob.m <= prob.g - 1 - r) {
    throw DomainError("twist m = " + std::to_string(prob.m) + " must exceed g - 1 - r = " +
                      std::to_string(prob.g - 1 - r));
  }
  return prob;
}

ChernSeries ChernSeries::from_class(const TautClass& x) {
  ChernSeries out{x.signature(), {}};
  const int top = std::max(x.max_degree(), 0);
  for (int j = 0; j <= top; ++j) out.pieces.push_back(x.degree_part(j));
  return out;
}

TautClass ChernSeries::piece(int j) const {
  if (j < 0 || j > top()) return TautClass(signature);
  return pieces[static_cast<std::size_t>(j)];
}

Rational ChernSeries::rank_part() const { return piece(0).constant_term(); }

TautClass ChernSeries::total() const {
  TautClass out(signature);
  for (const auto& p : pieces) out += p;
  return out;
}

}  // namespace tautcalc::degeneracy
