#pragma once

#include <map>
#include <string>
#include <vector>

#include "tautcalc/combinatorics.hpp"
#include "tautcalc/divisors.hpp"
#include "tautcalc/exact.hpp"

namespace tautcalc::applications {

/// Vanishing orders 0 <= a_0 < ... < a_r <= d at one marked point.
struct RamificationProfile {
  IntSequence orders;

  /// Throws DomainError unless there are r + 1 strictly increasing orders in [0, d].
  void validate(long r, long d) const;
  /// sum (a_i - i).
  long weight() const;
};

/// Orders along a chain of divisors 0 = D_0 < D_1 < ... Orders may repeat;
/// each is the degree of some D_l.
struct MultivanishingProfile {
  IntSequence orders;
  IntSequence divisor_degrees;

  /// Throws DomainError on a malformed profile: orders not weakly increasing
  /// in [0, d], an order that is no divisor degree, or a level repeated more
  /// than deg(D_{l+1}) - deg(D_l) times.
  void validate(long r, long d) const;
  /// sum over levels of binom(r_l, 2), r_l the multiplicity of level l.
  long repetition_penalty() const;
};

/// g - (r+1)(g-d+r).
long rho(long g, long r, long d);
long rho_ramified(long g, long r, long d, const std::vector<RamificationProfile>& profiles);

enum class SecondFactor {
  /// g - d + r, matching the plain Brill-Noether number.
  kCorrected,
  /// g - r + d as it appears in the multivanishing statement.
  kAsPrinted,
};

long rho_multivanishing(long g, long r, long d, const MultivanishingProfile& prof,
                        SecondFactor factor = SecondFactor::kCorrected);

/// Cases of the necessary conditions on limit linear series at marked points
/// of low-genus or general curves. Each is a predicate only.
enum class LemmaCase { kI, kII, kIII, kIV, kV, kVI };

struct FeasibilityData {
  long g = 0;
  long r = 0;
  long d = 0;
  std::vector<RamificationProfile> profiles;
};

std::string to_string(LemmaCase c);
/// The lower bound on rho the case imposes: -r for III, 0 otherwise.
long feasibility_bound(LemmaCase c, long r);
/// rho_ramified(data) >= bound. Throws DomainError when the genus or the
/// number of marked points does not fit the case.
bool feasibility_check(LemmaCase c, const FeasibilityData& data);

/// rho(2g-1, r, 2g-2) for g = r(r+1)/2: the double cover of a Prym curve
/// carrying a g^r_{2g-2}.
long double_cover_rho(int r);

enum class SequenceCase {
  /// Gaps of at least two inside [g-r-1, g+r-1].
  kSecondRel,
  /// Even orders inside [g-r-2, g+r-2]; the (2g-3, 1) multidegree.
  kStronglyEven,
  /// Even orders inside [g-r-1, g+r-1]; the (2g-2, 0) multidegree.
  kStronglyOdd,
};

std::string to_string(SequenceCase c);

struct SequenceConstraints {
  long g = 0;
  long d = 0;
  long min_first = 0;
  long max_last = 0;
  long min_gap = 1;
  bool even_only = false;
};

/// The constraint set for r >= 3 and g = r(r+1)/2.
SequenceConstraints sequence_constraints(int r, SequenceCase c);
/// Every strictly increasing sequence of r + 1 orders in [0, d] meeting the
/// constraints, in lexicographic order.
std::vector<IntSequence> enumerate_sequences(int r, const SequenceConstraints& constraints);
/// The unique solution. Throws Error on zero or several solutions.
RamificationProfile vanishing_sequence_solver(int r, SequenceCase c);

enum class TestCurve { kA1, kAgMinus1, kXi, kAPointed };

/// Pairings of a test curve with the generators it meets, keyed like
/// divisors::SignedCoordinates. Unlisted generators pair to zero.
struct TestCurveProfile {
  std::string name;
  int g = 0;
  std::map<std::string, Rational> pairings;
};

TestCurveProfile test_curve(TestCurve curve, int g);
/// Accepts "A1", "Ag-1", "xi" and "A" (case-insensitive).
TestCurve parse_test_curve(const std::string& name);

/// sum over the curve's support of pairing times signed class coefficient.
/// Throws divisors::UnknownCoefficient for an UNKNOWN coefficient in the
/// support, DomainError for a generator the class does not carry.
Rational test_curve_pairing(const TestCurveProfile& curve, const divisors::SignedCoordinates& cls);

struct NikulinReport {
  int r = 0;
  int g = 0;
  Rational pairing;
  Rational expected;  // 1 - g/3

  bool matches() const { return pairing == expected; }
  bool negative() const { return pairing < 0; }
};

/// Xi_g against the Prym-Brill-Noether class of genus r(r+1)/2.
NikulinReport nikulin(int r);

/// A divisor class in (psi, lambda, delta0', delta0ram) coordinates,
/// with signed coefficients. Other coordinates are not tracked.
struct PsiClass {
  std::string name;
  Rational psi;
  Rational lambda;
  Rational delta0p;
  Rational delta0ram;
};

struct KodairaReport {
  std::vector<PsiClass> inputs;
  PsiClass target;
  std::vector<Rational> solution;  // x, y, z
  std::vector<Rational> expected_solution;
  PsiClass combination;
  Rational expected_psi;
  bool perturbation_detected = false;

  bool solution_matches() const { return solution == expected_solution; }
  bool targets_hit() const;
  bool psi_matches() const { return combination.psi == expected_psi; }
  bool psi_below_one() const { return combination.psi < 1; }
  bool passes() const;
};

PsiClass combine(const std::vector<PsiClass>& inputs, const std::vector<Rational>& weights);

/// Solves for the combination of the three pulled-back classes in genus 14
/// with lambda, delta0', delta0ram part 13, -2, -3 and checks its psi part.
KodairaReport kodaira_r14_2();

}  // namespace tautcalc::applications
