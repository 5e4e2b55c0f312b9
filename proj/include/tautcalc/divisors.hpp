#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tautcalc/exact.hpp"

namespace tautcalc::divisors {

/// A coefficient the theory leaves undetermined. Reading one is an error.
class UnknownCoefficient : public Error {
 public:
  using Error::Error;
};

using Coefficient = std::optional<Rational>;

/// Signed coefficient of every generator, keyed by generator name
/// ("lambda", "delta0p", "delta3", "psi1", ...). Boundary terms written as
/// "- b delta" appear here as -b.
using SignedCoordinates = std::map<std::string, Coefficient>;

const Rational& require_known(const Coefficient& c, const std::string& name);

/// a lambda - b0' delta0' - b0'' delta0'' - b0ram delta0ram
///   - sum b_i delta_i - sum b_{i:g-i} delta_{i:g-i}
/// on the compactified Prym moduli space in genus g. Coefficients are stored
/// as displayed, so a boundary coefficient b enters the class as -b.
struct PrymDivisorClass {
  int g = 0;
  Rational a;
  Rational b0p;
  Rational b0pp;
  Rational b0ram;
  std::vector<Coefficient> b;        // index i for 1 <= i <= g-1; slot 0 unused
  std::vector<Coefficient> b_mixed;  // index i for 1 <= i <= g/2; slot 0 unused

  /// All coefficients zero, every b_mixed UNKNOWN.
  static PrymDivisorClass zero(int g);
  /// The class of lambda alone.
  static PrymDivisorClass lambda(int g);
  /// The class of delta_i alone (display coefficient b_i = -1).
  static PrymDivisorClass delta(int g, int i);

  const Coefficient& b_at(int i) const;
  Coefficient& b_at(int i);
  const Coefficient& b_mixed_at(int i) const;

  SignedCoordinates signed_coordinates() const;
  /// Names of the UNKNOWN coefficients, e.g. "1:5".
  std::vector<std::string> unknown_labels() const;
};

/// a1 psi1 + a2 psi2 + a lambda - b0 delta0 - sum_{i>=0} b_{i,{1,2}} delta_{i,{1,2}}
///   - sum_{i>=1} b_{i,1} delta_{i,1}, up to the global constant c.
struct PointedDivisorClass2 {
  int g = 0;
  Rational a1;
  Rational a2;
  Rational a;
  Rational b0;
  std::vector<Rational> b_12;    // 0 <= i <= g-1
  std::vector<Coefficient> b_1;  // index i for 1 <= i <= g-1; slot 0 unused
  Coefficient c_scale;

  SignedCoordinates signed_coordinates() const;
  std::vector<std::string> unknown_labels() const;
};

/// psi psi + lambda lambda + sum delta_i delta_i on the 1-pointed moduli space
/// in genus h, with signed coefficients.
struct OnePointedClass {
  int h = 0;
  Rational psi;
  Rational lambda;
  std::vector<Rational> delta;  // 0 <= i <= h-1

  SignedCoordinates signed_coordinates() const;
};

/// Coefficients of eps_2 .. eps_{g-2} on the genus-0 space with g markings.
struct Eps0Class {
  int g = 0;
  std::vector<Rational> eps;  // index i for 2 <= i <= g-2; slots 0, 1 unused

  const Rational& at(int i) const;
  bool is_zero() const;
};

/// Pullback of a Prym class to the genus-0 boundary stratum where elliptic
/// tails are glued to all markings.
Eps0Class pullback_to_genus0(const PrymDivisorClass& x);

/// Every relation the coefficient solution must satisfy, with its residual.
struct RelationCheck {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

/// Solves for the Prym-Brill-Noether class in genus g = r(r+1)/2, r >= 3,
/// normalized by a = g + 1. Throws Error when a relation fails.
PrymDivisorClass solve_prym_class(int r);
/// The relations and closed forms, evaluated on a class in genus g.
std::vector<RelationCheck> prym_relations(const PrymDivisorClass& x);
std::vector<RelationCheck> prym_closed_forms(const PrymDivisorClass& x);

struct Slopes {
  Rational over_b0p;
  Rational over_b0pp;
  Rational over_b0ram;
};
Slopes slopes(const PrymDivisorClass& x);

struct MuNu {
  Rational mu;
  Rational nu;
  Rational n;
  Rational sigma;
};

/// Coefficients of the pointed Brill-Noether divisor in genus g - 1,
/// g = r(r+1)/2, over the Brill-Noether and Weierstrass classes.
MuNu mu_nu(int r);
OnePointedClass weierstrass_class(int h);
OnePointedClass brill_noether_class(int h);
OnePointedClass pointed_bn_class(int r);

/// The strongly Brill-Noether divisor in genus g = r(r+1)/2 - 1, with the
/// printed constant c.
PointedDivisorClass2 strongly_bn_class(int r);

/// (2g-1) a1 + a2 - b_{0,{1,2}}: the pairing with the curve obtained by moving
/// the first marking along a fixed general curve.
Rational moving_point_pairing(const PointedDivisorClass2& x);

/// Compares c * moving_point_pairing against the Fulton-Pragacz point-slice
/// number computed by the ring engine.
struct PointSliceCheck {
  int r = 0;
  Rational c_printed;
  Rational pairing;          // (2g-1) a1 + a2 - b_{0,{1,2}}
  Rational engine;           // integrate(eta_2 det)
  Rational implied_c;        // engine / pairing
  Rational ratio;            // implied_c / c_printed
  Rational n;                // closed-form degree of the diagonal
  Rational n_over_2g_minus_2;
  Rational implied_c_times_b012;
  bool printed_normalization_holds() const { return c_printed * pairing == engine; }
  bool n_normalization_holds() const { return implied_c_times_b012 == n_over_2g_minus_2; }
};
PointSliceCheck check_point_slice(int r, int threads = 1);

}  // namespace tautcalc::divisors
