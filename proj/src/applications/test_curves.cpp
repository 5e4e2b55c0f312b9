#include <algorithm>
#include <cctype>

#include "tautcalc/applications.hpp"

namespace tautcalc::applications {

TestCurveProfile test_curve(TestCurve curve, int g) {
  if (g < 2) throw DomainError("test curves need g >= 2");
  TestCurveProfile out;
  out.g = g;
  switch (curve) {
    case TestCurve::kA1:
      out.name = "A1";
      out.pairings = {{"lambda", Rational(1)},
                      {"delta0pp", Rational(4)},
                      {"delta0ram", Rational(4)},
                      {"delta1", Rational(-1)}};
      break;
    case TestCurve::kAgMinus1:
      out.name = "A" + std::to_string(g - 1);
      out.pairings = {{"lambda", Rational(1)},
                      {"delta0p", Rational(12)},
                      {"delta" + std::to_string(g - 1), Rational(-1)}};
      break;
    case TestCurve::kXi:
      out.name = "Xi" + std::to_string(g);
      out.pairings = {{"lambda", Rational(g + 1)},
                      {"delta0p", Rational(6 * g + 2)},
                      {"delta0ram", Rational(8)}};
      break;
    case TestCurve::kAPointed:
      out.name = "A";
      out.pairings = {{"psi1", Rational(2 * g - 1)},
                      {"psi2", Rational(1)},
                      {"delta0,{1,2}", Rational(1)}};
      break;
  }
  return out;
}

TestCurve parse_test_curve(const std::string& name) {
  std::string key = name;
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (key == "a1") return TestCurve::kA1;
  if (key == "ag-1" || key == "a_{g-1}") return TestCurve::kAgMinus1;
  if (key == "xi" || key == "xi_g") return TestCurve::kXi;
  if (key == "a" || key == "a_pointed") return TestCurve::kAPointed;
  throw DomainError("unknown test curve: " + name);
}

Rational test_curve_pairing(const TestCurveProfile& curve, const divisors::SignedCoordinates& cls) {
  Rational sum(0);
  for (const auto& [generator, weight] : curve.pairings) {
    if (weight == 0) continue;
    auto it = cls.find(generator);
    if (it == cls.end()) {
      throw DomainError("curve " + curve.name + " meets " + generator + ", which the class lacks");
    }
    sum += weight * divisors::require_known(it->second, generator);
  }
  return sum;
}

NikulinReport nikulin(int r) {
  const auto cls = divisors::solve_prym_class(r);
  NikulinReport out;
  out.r = r;
  out.g = cls.g;
  out.pairing = test_curve_pairing(test_curve(TestCurve::kXi, cls.g), cls.signed_coordinates());
  out.expected = 1 - make_rational(cls.g, 3);
  return out;
}

}  // namespace tautcalc::applications
