#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tautcalc/determinant.hpp"
#include "tautcalc/exact.hpp"
#include "tautcalc/taut_ring.hpp"

namespace tautcalc::degeneracy {

using ring::RingSignature;
using ring::TautClass;

/// Genus g = r(r+1)/2 - 1, degree d = g + r, twist m > g - 1 - r.
struct DegeneracyProblem {
  int r = 2;
  int g = 2;
  int m = 0;
  int d = 4;

  /// m defaults to g - r, the smallest admissible value.
  static DegeneracyProblem make(int r, std::optional<int> m = std::nullopt);

  RingSignature pair_ring() const { return RingSignature::make(2, g); }
  RingSignature triple_ring() const { return RingSignature::make(3, g); }
};

/// Graded pieces of a Chern character or total Chern class. pieces[j] is
/// homogeneous of complex degree j; pieces[0] is the rank (or 1) times the
/// unit.
struct ChernSeries {
  RingSignature signature;
  std::vector<TautClass> pieces;

  static ChernSeries from_class(const TautClass& x);

  /// Zero beyond the stored range.
  TautClass piece(int j) const;
  Rational rank_part() const;
  int top() const { return static_cast<int>(pieces.size()) - 1; }
  TautClass total() const;
};

TautClass divisor_class_D(int i, const DegeneracyProblem& prob);

/// ch(M_i) on C x C x Pic as the pushforward of
/// (1 + (1-g) eta_1) ch(nu^* L) (1 - exp(-[D_i])).
ChernSeries chern_character_Mi(int i, const DegeneracyProblem& prob);

/// Newton recursion n c_n = sum_{k=1}^n (-1)^{k-1} k! ch_k c_{n-k}.
ChernSeries chern_classes_from_character(const ChernSeries& ch, int top);

enum class EntryMode {
  kFull,
  /// Drops every monomial killed by eta_2, eta_3 and gamma_23 alike. Both
  /// intersection numbers only see the determinant through those products.
  kAnnihilatorReduced,
};

struct FpOptions {
  EntryMode mode = EntryMode::kFull;
  int threads = 1;
};

/// Chern data of every M_i and the twisted entries of the determinant.
class FpEngine {
 public:
  explicit FpEngine(DegeneracyProblem prob, FpOptions options = {});

  const DegeneracyProblem& problem() const { return prob_; }
  const FpOptions& options() const { return options_; }
  const ChernSeries& chern_character(int i) const { return ch_.at(static_cast<std::size_t>(i)); }
  const ChernSeries& chern_classes(int i) const { return c_.at(static_cast<std::size_t>(i)); }

  /// c_j^{(i)} = sum_k c_k(M_i) theta^{j-k} / (j-k)!; zero for j < 0.
  TautClass twisted_entry(int i, int j) const;

  /// (c^{(i)}_{2i-j})_{0 <= i, j <= r}.
  Matrix<TautClass> matrix() const;
  TautClass determinant() const;
  TautClass leibniz_determinant() const;

 private:
  TautClass reduce(const TautClass& x) const;

  DegeneracyProblem prob_;
  FpOptions options_;
  std::vector<ChernSeries> ch_;
  std::vector<ChernSeries> c_;
};

TautClass twisted_entry(int i, int j, const DegeneracyProblem& prob);
TautClass fp_determinant(const DegeneracyProblem& prob, FpOptions options = {});

/// integrate(det * (eta_2 + gamma_23 + eta_3)).
Rational intersect_diagonal(const TautClass& det, int g);
/// integrate(det * eta_2).
Rational intersect_point_slice(const TautClass& det, int g);
/// integrate(det * eta_3).
Rational intersect_point_slice_second(const TautClass& det, int g);
/// integrate(det * gamma_23).
Rational intersect_gamma23(const TautClass& det, int g);

/// The gamma_23 contribution of entries' gamma_24 gamma_34 summands alone:
/// every entry cut down to its theta-pure part plus its gamma_24 gamma_34
/// part, then paired with gamma_23.
Rational gamma_pair_term(const DegeneracyProblem& prob);

/// (1/(2i-j)!)_{0 <= i, j <= r}.
Matrix<Rational> theta_pure_matrix(int r);
Rational theta_pure_determinant(int r, int threads = 1);

/// g! times the closed double sum of Vandermonde values for the diagonal.
Rational n_combinatorial(const DegeneracyProblem& prob);
/// g! times the Vandermonde breakdown of integrate(det * eta_2).
Rational point_slice_breakdown(const DegeneracyProblem& prob);

// Closed forms of the Chern data as printed, in the C x C x Pic ring.
// eta := eta_2 + eta_3, gamma := gamma_24 + gamma_34.

/// Printed ch_0 .. ch_3 of M_i.
TautClass printed_ch(int degree, int i, const DegeneracyProblem& prob);

enum class FormulaVariant {
  /// The printed text.
  kLiteral,
  /// Consistent with the printed ch_0 .. ch_3 through the Newton recursion.
  kCorrected,
};

TautClass printed_c2(int i, const DegeneracyProblem& prob, FormulaVariant variant);
TautClass printed_c3(int i, const DegeneracyProblem& prob, FormulaVariant variant);
/// The printed twisted class c_1^{(i)}.
TautClass printed_twisted_c1(int i, const DegeneracyProblem& prob);
/// The simplified classes c'_k(M_i), k = 0..3, used for the determinant.
TautClass simplified_c(int k, int i, const DegeneracyProblem& prob);

struct FormulaCheck {
  int i = 0;
  std::string name;
  TautClass computed;
  TautClass expected;

  bool matches() const { return computed == expected; }
};

/// Engine ch_0 .. ch_3, c_2, c_3 of every M_i against the closed forms in
/// the requested variant (ch forms have a single variant).
std::vector<FormulaCheck> ring_cross_check(const FpEngine& engine, FormulaVariant variant);

}  // namespace tautcalc::degeneracy
