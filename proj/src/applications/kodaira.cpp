#include "tautcalc/applications.hpp"

namespace tautcalc::applications {

namespace {

std::vector<Rational> coordinates(const PsiClass& c) { return {c.lambda, c.delta0p, c.delta0ram}; }

std::vector<Rational> residual(const std::vector<PsiClass>& inputs, const std::vector<Rational>& weights,
                               const PsiClass& target) {
  const PsiClass sum = combine(inputs, weights);
  auto got = coordinates(sum);
  auto want = coordinates(target);
  for (std::size_t k = 0; k < got.size(); ++k) got[k] -= want[k];
  return got;
}

bool all_zero(const std::vector<Rational>& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace

PsiClass combine(const std::vector<PsiClass>& inputs, const std::vector<Rational>& weights) {
  if (inputs.size() != weights.size()) throw DomainError("one weight per class");
  PsiClass out{"combination", Rational(0), Rational(0), Rational(0), Rational(0)};
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    out.psi += weights[k] * inputs[k].psi;
    out.lambda += weights[k] * inputs[k].lambda;
    out.delta0p += weights[k] * inputs[k].delta0p;
    out.delta0ram += weights[k] * inputs[k].delta0ram;
  }
  return out;
}

bool KodairaReport::targets_hit() const {
  return combination.lambda == target.lambda && combination.delta0p == target.delta0p &&
         combination.delta0ram == target.delta0ram;
}

bool KodairaReport::passes() const {
  return solution_matches() && targets_hit() && psi_matches() && psi_below_one() && perturbation_detected;
}

KodairaReport kodaira_r14_2() {
  KodairaReport out;
  out.inputs = {
      {"BN14", Rational(0), Rational(34), Rational(-5), Rational(-10)},
      {"GP pullback", Rational(19289), Rational(308624), Rational(-47784), Rational(-62470)},
      {"R15 pullback", Rational(15), Rational(128), Rational(-20), Rational(-30)},
  };
  out.target = {"target", Rational(0), Rational(13), Rational(-2), Rational(-3)};

  std::vector<std::vector<Rational>> a(3, std::vector<Rational>(3));
  for (std::size_t col = 0; col < 3; ++col) {
    const auto c = coordinates(out.inputs[col]);
    for (std::size_t row = 0; row < 3; ++row) a[row][col] = c[row];
  }
  out.solution = solve_linear(a, coordinates(out.target));
  out.expected_solution = {make_rational(4603, 63570), make_rational(1, 50856), make_rational(683, 19560)};
  out.combination = combine(out.inputs, out.solution);
  out.expected_psi = make_rational(22963, 25428);

  std::vector<Rational> nudged = out.solution;
  nudged[2] += make_rational(1, 1000000);
  out.perturbation_detected = !all_zero(residual(out.inputs, nudged, out.target));
  return out;
}

}  // namespace tautcalc::applications
