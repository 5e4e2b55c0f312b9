#include "tautcalc/combinatorics.hpp"
#include "tautcalc/degeneracy.hpp"
#include "tautcalc/divisors.hpp"

namespace tautcalc::divisors {

MuNu mu_nu(int r) {
  if (r < 3) throw DomainError("mu and nu need r >= 3");
  const long g = static_cast<long>(r) * (r + 1) / 2;
  const Rational prod = factorial_ratio_product(r);

  MuNu out;
  out.n = Rational(factorial(g - 1)) * pow2(g) * prod *
          make_rational((r - 1L) * r * r * (r + 1L) * (r + 1L) * (r + 2L), 16);

  Rational sum(0);
  for (int i = 1; i <= r; ++i) {
    Rational term = make_rational(factorial(2L * i) * factorial(2L * r - 2 * i + 1),
                                  factorial(r - i) * factorial(r - i) * factorial(i) * factorial(i - 1));
    sum += term * p_polynomial(r, i);
  }
  out.sigma = Rational(factorial(g - 2)) * pow2(g) * prod * pow2(-(2L * r - 1)) * sum;

  out.mu = -out.n / (2 * g * (g - 2)) + out.sigma / (2 * (g - 2) * (g - 3));
  out.nu = out.n / ((g - 2) * (g - 1) * g);
  return out;
}

OnePointedClass weierstrass_class(int h) {
  if (h < 2) throw DomainError("Weierstrass class needs genus >= 2");
  const long g = h + 1;
  OnePointedClass w{h, make_rational(g * (g - 1), 2), Rational(-1), std::vector<Rational>(h, Rational(0))};
  for (long i = 1; i <= g - 2; ++i) w.delta[i] = -binomial(g - i, 2);
  return w;
}

OnePointedClass brill_noether_class(int h) {
  if (h < 2) throw DomainError("Brill-Noether class needs genus >= 2");
  const long g = h + 1;
  OnePointedClass bn{h, Rational(0), Rational(g + 2), std::vector<Rational>(h, Rational(0))};
  bn.delta[0] = -make_rational(g, 6);
  for (long i = 1; i <= g - 2; ++i) bn.delta[i] = Rational(-i * (g - i - 1));
  return bn;
}

OnePointedClass pointed_bn_class(int r) {
  const MuNu coeffs = mu_nu(r);
  const int h = r * (r + 1) / 2 - 1;
  const OnePointedClass bn = brill_noether_class(h);
  const OnePointedClass w = weierstrass_class(h);
  OnePointedClass out{h, coeffs.mu * bn.psi + coeffs.nu * w.psi,
                      coeffs.mu * bn.lambda + coeffs.nu * w.lambda, {}};
  for (int i = 0; i < h; ++i) out.delta.push_back(coeffs.mu * bn.delta[i] + coeffs.nu * w.delta[i]);
  return out;
}

PointedDivisorClass2 strongly_bn_class(int r) {
  if (r < 3) throw DomainError("the strongly Brill-Noether class needs r >= 3");
  if (r > 60) throw DomainError("r too large");
  const long g = static_cast<long>(r) * (r + 1) / 2 - 1;
  PointedDivisorClass2 x;
  x.g = static_cast<int>(g);
  x.a1 = make_rational(g * g + g + 2, 8);
  x.a2 = x.a1;
  x.a = g + 2;
  x.b0 = make_rational(g + 1, 6);
  for (long i = 0; i <= g - 1; ++i) x.b_12.push_back(make_rational((g - i) * (g + i + 1), 2));
  x.b_1.assign(static_cast<std::size_t>(g), std::nullopt);
  x.c_scale = Rational(factorial(g + 1)) / (g - 1) * pow2(g - 1) * factorial_ratio_product(r);

  // a_1 is tied to b_{0,{1,2}} by the point-slice relation.
  const Rational expected_a1 = make_rational(g * g + g + 2, 4 * g * (g + 1)) * x.b_12[0];
  if (x.a1 != expected_a1) throw Error("a_1 disagrees with its relation to b_{0,{1,2}}");
  return x;
}

Rational moving_point_pairing(const PointedDivisorClass2& x) {
  if (x.b_12.empty()) throw DomainError("class has no b_{0,{1,2}}");
  return (2 * x.g - 1) * x.a1 + x.a2 - x.b_12[0];
}

PointSliceCheck check_point_slice(int r, int threads) {
  const PointedDivisorClass2 x = strongly_bn_class(r);
  const auto prob = degeneracy::DegeneracyProblem::make(r);
  const auto det = degeneracy::fp_determinant(prob, {degeneracy::EntryMode::kFull, threads});

  PointSliceCheck out;
  out.r = r;
  out.c_printed = require_known(x.c_scale, "c");
  out.pairing = moving_point_pairing(x);
  out.engine = degeneracy::intersect_point_slice(det, prob.g);
  out.implied_c = out.engine / out.pairing;
  out.ratio = out.implied_c / out.c_printed;
  out.n = degeneracy::intersect_diagonal(det, prob.g);
  out.n_over_2g_minus_2 = out.n / (2 * prob.g - 2);
  out.implied_c_times_b012 = out.implied_c * x.b_12[0];
  return out;
}

}  // namespace tautcalc::divisors
