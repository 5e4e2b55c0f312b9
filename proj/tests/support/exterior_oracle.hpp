#pragma once

// Independent model of H^*(C^3 x J) for a genus-g curve: each curve factor
// carries odd classes alpha_a, beta_a with alpha_a beta_a = eta, and J
// carries the exterior algebra on sigma_a, tau_a with theta = sum sigma_a tau_a.
// Odd generators are bits of a 64-bit mask, so g <= 5.

#include <bit>
#include <cstdint>
#include <map>
#include <utility>

#include "tautcalc/exact.hpp"
#include "tautcalc/taut_ring.hpp"

namespace oracle {

using tautcalc::Rational;

class Exterior {
 public:
  using Key = std::pair<std::uint64_t, std::uint8_t>;  // odd generators, eta mask
  using Element = std::map<Key, Rational>;

  explicit Exterior(int g) : g_(g) {}

  int genus() const { return g_; }

  Element unit() const { return {{{0, 0}, Rational(1)}}; }
  Element eta(int curve) const { return {{{0, static_cast<std::uint8_t>(1U << curve)}, Rational(1)}}; }
  Element odd(int bit) const { return {{{std::uint64_t{1} << bit, 0}, Rational(1)}}; }

  int alpha(int curve, int a) const { return (curve - 1) * 2 * g_ + a; }
  int beta(int curve, int a) const { return (curve - 1) * 2 * g_ + g_ + a; }
  int sigma(int a) const { return 6 * g_ + a; }
  int tau(int a) const { return 7 * g_ + a; }

  Element gamma(int i, int j) const {
    Element out;
    for (int a = 0; a < g_; ++a) {
      const int ja = j == 4 ? sigma(a) : alpha(j, a);
      const int jb = j == 4 ? tau(a) : beta(j, a);
      add(out, mul(odd(beta(i, a)), odd(ja)), Rational(1));
      add(out, mul(odd(alpha(i, a)), odd(jb)), Rational(-1));
    }
    return out;
  }

  Element theta() const {
    Element out;
    for (int a = 0; a < g_; ++a) add(out, mul(odd(sigma(a)), odd(tau(a))), Rational(1));
    return out;
  }

  Element mul(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [kx, cx] : x) {
      for (const auto& [ky, cy] : y) {
        int sign = 0;
        Key k;
        if (!mul_basis(kx, ky, sign, k)) continue;
        Rational c = cx * cy;
        if (sign < 0) c = -c;
        add(out, Element{{k, c}}, Rational(1));
      }
    }
    return out;
  }

  static void add(Element& out, const Element& x, const Rational& scale) {
    for (const auto& [k, c] : x) {
      Rational& slot = out[k];
      slot += scale * c;
      if (slot == 0) out.erase(k);
    }
  }

  /// Image of a model-ring class.
  Element image(const tautcalc::ring::TautClass& x) const {
    Element out;
    for (const auto& [m, c] : x.terms()) {
      Element term = unit();
      for (int t = 0; t < m.theta(); ++t) term = mul(term, theta());
      for (int i = 1; i <= 3; ++i) {
        if (m.has_eta(i)) term = mul(term, eta(i));
      }
      for (int slot = 0; slot < 6; ++slot) {
        if ((m.gamma_mask() >> slot) & 1U) {
          const auto [i, j] = tautcalc::ring::slot_pair(slot);
          term = mul(term, gamma(i, j));
        }
      }
      add(out, term, c);
    }
    return out;
  }

  /// Degree on C_2 x C_3 x J, oriented so that theta^g / g! integrates to 1.
  Rational integrate_pair(const Element& x) const {
    std::uint64_t top = 0;
    for (int a = 0; a < g_; ++a) top |= (std::uint64_t{1} << sigma(a)) | (std::uint64_t{1} << tau(a));
    Element omega = unit();
    for (int a = 0; a < g_; ++a) omega = mul(omega, mul(odd(sigma(a)), odd(tau(a))));
    const Rational orientation = omega.at({top, 0});
    auto it = x.find({top, static_cast<std::uint8_t>((1U << 2) | (1U << 3))});
    if (it == x.end()) return Rational(0);
    return it->second * orientation;
  }

 private:
  bool mul_basis(const Key& x, const Key& y, int& sign, Key& out) const {
    if (x.second & y.second) return false;
    if (x.first & y.first) return false;
    int swaps = 0;
    for (std::uint64_t rest = y.first; rest; rest &= rest - 1) {
      const int bit = std::countr_zero(rest);
      swaps += std::popcount(x.first >> (bit + 1));
    }
    sign = swaps % 2 ? -1 : 1;
    std::uint64_t odd_part = x.first | y.first;
    std::uint8_t eta_part = x.second | y.second;
    for (int curve = 1; curve <= 3; ++curve) {
      const std::uint64_t block = ((std::uint64_t{1} << (2 * g_)) - 1) << ((curve - 1) * 2 * g_);
      const std::uint64_t here = odd_part & block;
      const int count = std::popcount(here);
      if (count == 0) continue;
      if ((eta_part >> curve) & 1U) return false;
      if (count > 2) return false;
      if (count == 2) {
        // Adjacent in the sorted product; alpha_a beta_a = eta, anything else is 0.
        const int low = std::countr_zero(here);
        const int high = 63 - std::countl_zero(here);
        if (high - low != g_ || low - (curve - 1) * 2 * g_ >= g_) return false;
        odd_part &= ~here;
        eta_part |= static_cast<std::uint8_t>(1U << curve);
      }
    }
    out = {odd_part, eta_part};
    return true;
  }

  int g_;
};

}  // namespace oracle
