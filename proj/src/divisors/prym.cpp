#include "tautcalc/divisors.hpp"

namespace tautcalc::divisors {

namespace {

int prym_genus(int r) {
  if (r < 3) throw DomainError("the Prym-Brill-Noether class needs r >= 3");
  if (r > 60) throw DomainError("r too large");
  return r * (r + 1) / 2;
}

// Weights of b_{g-1} and b_1 in the interpolation formula for b_i.
Rational weight_last(int g, int i) { return make_rational(static_cast<long>(i - 1) * (g - i), g - 2); }
Rational weight_first(int g, int i) {
  return make_rational(static_cast<long>(g - i - 1) * (g - i), static_cast<long>(g - 1) * (g - 2));
}

}  // namespace

std::vector<RelationCheck> prym_relations(const PrymDivisorClass& x) {
  const int g = x.g;
  const Rational& b1 = require_known(x.b_at(1), "delta1");
  const Rational& bl = require_known(x.b_at(g - 1), "delta" + std::to_string(g - 1));
  std::vector<RelationCheck> out;
  out.push_back({"a - 12 b0' + b_{g-1} = 0", x.a - 12 * x.b0p + bl, Rational(0)});
  out.push_back({"a - 4 b0'' - 4 b0ram + b_1 = 0", x.a - 4 * x.b0pp - 4 * x.b0ram + b1, Rational(0)});
  for (int i = 1; i <= g - 1; ++i) {
    const Rational& bi = require_known(x.b_at(i), "delta" + std::to_string(i));
    out.push_back({"b_" + std::to_string(i) + " interpolation", bi,
                   weight_last(g, i) * bl + weight_first(g, i) * b1});
  }
  out.push_back({"b_{g-2} = 30 b0' - 3a", require_known(x.b_at(g - 2), "delta" + std::to_string(g - 2)),
                 30 * x.b0p - 3 * x.a});
  out.push_back({"a / b0' = 6 + 6/g", x.a / x.b0p, 6 + make_rational(6, g)});
  out.push_back({"a / b0'' = (8g+8)/(g^2-g+2)", x.a / x.b0pp,
                 make_rational(8L * g + 8, static_cast<long>(g) * g - g + 2)});
  return out;
}

std::vector<RelationCheck> prym_closed_forms(const PrymDivisorClass& x) {
  const long g = x.g;
  std::vector<RelationCheck> out;
  out.push_back({"a = g+1", x.a, Rational(g + 1)});
  out.push_back({"b0' = g/6", x.b0p, make_rational(g, 6)});
  out.push_back({"b0'' = (g^2-g+2)/8", x.b0pp, make_rational(g * g - g + 2, 8)});
  out.push_back({"b0ram = g/4", x.b0ram, make_rational(g, 4)});
  for (int i = 1; i <= g - 1; ++i) {
    out.push_back({"b_" + std::to_string(i) + " = (g-i)(g+i-1)/2",
                   require_known(x.b_at(i), "delta" + std::to_string(i)),
                   make_rational((g - i) * (g + i - 1), 2)});
  }
  return out;
}

PrymDivisorClass solve_prym_class(int r) {
  const int g = prym_genus(r);
  PrymDivisorClass x = PrymDivisorClass::zero(g);

  x.a = g + 1;
  x.b0p = x.a / (6 + make_rational(6, g));
  x.b0pp = x.a * make_rational(static_cast<long>(g) * g - g + 2, 8L * g + 8);
  const Rational b_last = 12 * x.b0p - x.a;

  // b_{g-2} from its own relation and from interpolation determine b_1.
  const Rational b_gm2 = 30 * x.b0p - 3 * x.a;
  const Rational b1 = (b_gm2 - weight_last(g, g - 2) * b_last) / weight_first(g, g - 2);
  x.b0ram = (x.a - 4 * x.b0pp + b1) / 4;
  for (int i = 1; i <= g - 1; ++i) x.b_at(i) = weight_last(g, i) * b_last + weight_first(g, i) * b1;

  for (const auto& check : prym_relations(x)) {
    if (!check.holds()) {
      throw Error("relation " + check.name + " fails: " + to_string(check.lhs) +
                  " != " + to_string(check.rhs));
    }
  }
  if (!pullback_to_genus0(x).is_zero()) throw Error("pullback to genus 0 does not vanish");
  return x;
}

Slopes slopes(const PrymDivisorClass& x) {
  if (x.b0p == 0 || x.b0pp == 0 || x.b0ram == 0) {
    throw DomainError("slope needs nonzero delta_0 coefficients");
  }
  return {x.a / x.b0p, x.a / x.b0pp, x.a / x.b0ram};
}

}  // namespace tautcalc::divisors
