#pragma once

// Even cohomology of C^k x Pic(C), k in {2, 3}, for a curve C of genus g,
// modelled by the subring generated by
//   eta_i    point class pulled back from curve factor i,
//   gamma_ij the composite of odd classes on factors i and j,
//   theta    the theta class pulled back from Pic.
//
// Curve factors are indexed 1..3 and the Pic factor is always 4. The
// two-factor ring uses curve indices {2, 3}, so classes computed on C^3 x Pic
// and pushed forward along factor 1 land in it without relabeling.
//
// Normal form is reached with the relations
//   eta_i^2 = 0,   eta_i gamma_il = 0,
//   gamma_ij^2 = -2g eta_i eta_j      (i, j curve factors),
//   gamma_i4^2 = -2 eta_i theta,
//   gamma_ij gamma_il = eta_i gamma_jl (i a shared curve factor, j != l).
// Monomials of degree above k + g (the ambient dimension), or of real degree
// above 2g on the Pic factor, are discarded.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tautcalc/exact.hpp"

namespace tautcalc::ring {

inline constexpr int kPicIndex = 4;

class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

struct RingSignature {
  int curve_factors = 2;
  int genus = 1;

  static RingSignature make(int curve_factors, int genus);

  int top_degree() const { return curve_factors + genus; }
  int first_curve_index() const { return 4 - curve_factors; }
  bool is_curve_index(int i) const { return i >= first_curve_index() && i <= 3; }
  bool valid_index(int i) const { return is_curve_index(i) || i == kPicIndex; }

  friend bool operator==(const RingSignature&, const RingSignature&) = default;
};

/// Index of the unordered pair {i, j} (1 <= i < j <= 4) in 0..5.
int pair_slot(int i, int j);
std::pair<int, int> slot_pair(int slot);

/// theta^a * prod eta_i * prod gamma_ij in normal form. Degrees are complex
/// (algebraic) degrees: every generator has degree 1.
class TautMonomial {
 public:
  TautMonomial() = default;

  static TautMonomial theta_power(int power);
  static TautMonomial eta(int i);
  static TautMonomial gamma(int i, int j);

  int theta() const { return theta_; }
  std::uint8_t eta_mask() const { return eta_mask_; }
  std::uint8_t gamma_mask() const { return gamma_mask_; }

  bool has_eta(int i) const { return (eta_mask_ >> i) & 1U; }
  bool has_gamma(int i, int j) const { return (gamma_mask_ >> pair_slot(i, j)) & 1U; }
  bool touches_index(int i) const;
  int degree() const;
  /// Real degree carried by the Pic factor: 2 theta plus the gamma_i4 count.
  int pic_degree() const;

  /// True when the monomial only uses generators of the given signature.
  bool fits(const RingSignature& sig) const;

  TautMonomial without_eta(int i) const;
  TautMonomial with_theta(int power) const;

  /// "eta2*eta3*gamma24*gamma34*theta^5"; the unit prints as "1".
  std::string to_string() const;

  friend auto operator<=>(const TautMonomial&, const TautMonomial&) = default;

 private:
  friend class MonomialReducer;

  int theta_ = 0;
  std::uint8_t eta_mask_ = 0;    // bit i for eta_i
  std::uint8_t gamma_mask_ = 0;  // bit pair_slot(i, j)
};

/// True when the monomial is zero for dimension reasons: total degree above
/// k + g, or real degree above 2g on the Pic factor.
bool vanishes_in(const TautMonomial& m, const RingSignature& sig);

struct ScaledMonomial {
  long factor;
  TautMonomial monomial;
};

/// Product of two normal-form monomials: a single monomial times an integer,
/// or nothing when the product vanishes.
std::optional<ScaledMonomial> multiply_monomials(const TautMonomial& a, const TautMonomial& b,
                                                 int genus);

/// Normal form of an arbitrary product theta^a * eta_S * prod gamma_p, where
/// the gamma factors form a multiset of pair slots.
std::optional<ScaledMonomial> normalize_product(int theta, std::uint8_t eta_mask,
                                                std::vector<int> gamma_slots, int genus);

/// Finite exact combination of normal-form monomials.
class TautClass {
 public:
  using TermMap = std::map<TautMonomial, Rational>;

  explicit TautClass(RingSignature sig);
  TautClass(RingSignature sig, const Rational& constant);

  static TautClass one(RingSignature sig) { return TautClass(sig, Rational(1)); }
  static TautClass monomial(RingSignature sig, const TautMonomial& m, const Rational& c = 1);
  static TautClass eta(RingSignature sig, int i);
  static TautClass gamma(RingSignature sig, int i, int j);
  static TautClass theta(RingSignature sig);

  const RingSignature& signature() const { return sig_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const TautMonomial& m) const;
  Rational constant_term() const { return coefficient(TautMonomial{}); }
  /// Homogeneous piece of the given degree.
  TautClass degree_part(int degree) const;
  int max_degree() const;
  bool involves_theta() const;

  /// Keeps the terms accepted by the predicate.
  template <class Pred>
  TautClass filtered(Pred keep) const {
    TautClass out(sig_);
    for (const auto& [m, c] : terms_) {
      if (keep(m)) out.terms_.emplace(m, c);
    }
    return out;
  }

  /// Same monomials, reinterpreted in another signature they fit in.
  TautClass with_signature(RingSignature sig) const;

  void add_term(const TautMonomial& m, const Rational& c);

  TautClass& operator+=(const TautClass& other);
  TautClass& operator-=(const TautClass& other);
  TautClass& operator*=(const Rational& scalar);
  TautClass& operator*=(const TautClass& other);

  friend TautClass operator+(TautClass a, const TautClass& b) { return a += b; }
  friend TautClass operator-(TautClass a, const TautClass& b) { return a -= b; }
  friend TautClass operator-(TautClass a) { return a *= Rational(-1); }
  friend TautClass operator*(TautClass a, const Rational& s) { return a *= s; }
  friend TautClass operator*(const Rational& s, TautClass a) { return a *= s; }
  friend TautClass operator*(const TautClass& a, const TautClass& b);

  friend bool operator==(const TautClass& a, const TautClass& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_signature(const TautClass& other) const;

  RingSignature sig_;
  TermMap terms_;
};

TautClass multiply(const TautClass& x, const TautClass& y);

/// sum_{n>=0} x^n / n!, keeping degrees <= degree_cap. x must have no
/// constant term and must not involve theta.
TautClass exp_nilpotent(const TautClass& x, int degree_cap);

/// Integration over curve factor 1: C^3 x Pic -> C^2 x Pic.
TautClass pushforward_factor1(const TautClass& x);

/// Pullback along the projection C^3 x Pic -> C^2 x Pic forgetting factor 1.
TautClass pullback_factor1(const TautClass& x);

/// Degree of a class on C^2 x Pic: g! times the coefficient of
/// eta2 eta3 theta^g. Every other top-degree normal monomial carries an
/// unpaired odd class on some curve factor and integrates to zero.
Rational integrate(const TautClass& x);

/// Sorted "monomial : coefficient" lines, one per term.
std::vector<std::string> debug_lines(const TautClass& x);
std::string debug_string(const TautClass& x);

}  // namespace tautcalc::ring
