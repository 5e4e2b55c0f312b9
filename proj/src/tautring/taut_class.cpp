#include <algorithm>

#include "tautcalc/taut_ring.hpp"

namespace tautcalc::ring {

TautClass::TautClass(RingSignature sig) : sig_(RingSignature::make(sig.curve_factors, sig.genus)) {}

TautClass::TautClass(RingSignature sig, const Rational& constant) : TautClass(sig) {
  add_term(TautMonomial{}, constant);
}

TautClass TautClass::monomial(RingSignature sig, const TautMonomial& m, const Rational& c) {
  TautClass out(sig);
  out.add_term(m, c);
  return out;
}

TautClass TautClass::eta(RingSignature sig, int i) {
  return monomial(sig, TautMonomial::eta(i));
}

TautClass TautClass::gamma(RingSignature sig, int i, int j) {
  return monomial(sig, TautMonomial::gamma(i, j));
}

TautClass TautClass::theta(RingSignature sig) {
  return monomial(sig, TautMonomial::theta_power(1));
}

Rational TautClass::coefficient(const TautMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

TautClass TautClass::degree_part(int degree) const {
  return filtered([degree](const TautMonomial& m) { return m.degree() == degree; });
}

int TautClass::max_degree() const {
  int out = -1;
  for (const auto& [m, c] : terms_) out = std::max(out, m.degree());
  return out;
}

bool TautClass::involves_theta() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& term) { return term.first.theta() > 0; });
}

TautClass TautClass::with_signature(RingSignature sig) const {
  TautClass out(sig);
  for (const auto& [m, c] : terms_) out.add_term(m, c);
  return out;
}

void TautClass::add_term(const TautMonomial& m, const Rational& c) {
  if (!m.fits(sig_)) {
    throw SignatureMismatch("monomial " + m.to_string() + " is outside the ring signature");
  }
  if (c == 0 || vanishes_in(m, sig_)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void TautClass::require_same_signature(const TautClass& other) const {
  if (!(sig_ == other.sig_)) throw SignatureMismatch("tautological classes from different rings");
}

TautClass& TautClass::operator+=(const TautClass& other) {
  require_same_signature(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

TautClass& TautClass::operator-=(const TautClass& other) {
  require_same_signature(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

TautClass& TautClass::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

TautClass& TautClass::operator*=(const TautClass& other) {
  *this = *this * other;
  return *this;
}

TautClass operator*(const TautClass& a, const TautClass& b) {
  a.require_same_signature(b);
  TautClass out(a.sig_);
  const int top = a.sig_.top_degree();
  for (const auto& [ma, ca] : a.terms_) {
    const int da = ma.degree();
    for (const auto& [mb, cb] : b.terms_) {
      if (da + mb.degree() > top) continue;
      auto product = multiply_monomials(ma, mb, a.sig_.genus);
      if (!product) continue;
      Rational coeff = ca * cb;
      coeff *= product->factor;
      out.add_term(product->monomial, coeff);
    }
  }
  return out;
}

TautClass multiply(const TautClass& x, const TautClass& y) { return x * y; }

std::vector<std::string> debug_lines(const TautClass& x) {
  std::vector<std::string> lines;
  lines.reserve(x.size());
  for (const auto& [m, c] : x.terms()) lines.push_back(m.to_string() + " : " + to_string(c));
  std::sort(lines.begin(), lines.end());
  return lines;
}

std::string debug_string(const TautClass& x) {
  std::string out;
  for (const auto& line : debug_lines(x)) {
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace tautcalc::ring
