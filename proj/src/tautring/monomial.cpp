#include <array>
#include <bit>

#include "tautcalc/taut_ring.hpp"

namespace tautcalc::ring {

namespace {

constexpr std::array<std::pair<int, int>, 6> kSlots{{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

int shared_curve_index(int slot_a, int slot_b) {
  auto [a1, a2] = kSlots[slot_a];
  auto [b1, b2] = kSlots[slot_b];
  for (int x : {a1, a2}) {
    if (x != kPicIndex && (x == b1 || x == b2)) return x;
  }
  return 0;
}

int other_end(int slot, int index) {
  auto [a, b] = kSlots[slot];
  return a == index ? b : a;
}

}  // namespace

RingSignature RingSignature::make(int curve_factors, int genus) {
  if (curve_factors != 2 && curve_factors != 3) {
    throw DomainError("ring signature needs 2 or 3 curve factors");
  }
  if (genus < 1) throw DomainError("ring signature needs genus >= 1");
  return RingSignature{curve_factors, genus};
}

int pair_slot(int i, int j) {
  if (i > j) std::swap(i, j);
  for (int s = 0; s < 6; ++s) {
    if (kSlots[s].first == i && kSlots[s].second == j) return s;
  }
  throw DomainError("gamma index pair out of range");
}

std::pair<int, int> slot_pair(int slot) {
  if (slot < 0 || slot >= 6) throw DomainError("gamma slot out of range");
  return kSlots[slot];
}

TautMonomial TautMonomial::theta_power(int power) {
  if (power < 0) throw DomainError("negative theta power");
  TautMonomial m;
  m.theta_ = power;
  return m;
}

TautMonomial TautMonomial::eta(int i) {
  if (i < 1 || i > 3) throw DomainError("eta index must be a curve factor");
  TautMonomial m;
  m.eta_mask_ = static_cast<std::uint8_t>(1U << i);
  return m;
}

TautMonomial TautMonomial::gamma(int i, int j) {
  if (i == j) throw DomainError("gamma needs two distinct indices");
  if (std::min(i, j) == kPicIndex) throw DomainError("gamma needs a curve factor");
  TautMonomial m;
  m.gamma_mask_ = static_cast<std::uint8_t>(1U << pair_slot(i, j));
  return m;
}

bool TautMonomial::touches_index(int i) const {
  if (i != kPicIndex && has_eta(i)) return true;
  for (int s = 0; s < 6; ++s) {
    if (((gamma_mask_ >> s) & 1U) && (kSlots[s].first == i || kSlots[s].second == i)) return true;
  }
  return false;
}

int TautMonomial::degree() const {
  return theta_ + std::popcount(static_cast<unsigned>(eta_mask_)) +
         std::popcount(static_cast<unsigned>(gamma_mask_));
}

int TautMonomial::pic_degree() const {
  const unsigned pic_slots = (1U << 2) | (1U << 4) | (1U << 5);
  return 2 * theta_ + std::popcount(static_cast<unsigned>(gamma_mask_) & pic_slots);
}

bool vanishes_in(const TautMonomial& m, const RingSignature& sig) {
  return m.degree() > sig.top_degree() || m.pic_degree() > 2 * sig.genus;
}

bool TautMonomial::fits(const RingSignature& sig) const {
  for (int i = 1; i <= 3; ++i) {
    if (!sig.is_curve_index(i) && touches_index(i)) return false;
  }
  return true;
}

TautMonomial TautMonomial::without_eta(int i) const {
  TautMonomial m = *this;
  m.eta_mask_ = static_cast<std::uint8_t>(m.eta_mask_ & ~(1U << i));
  return m;
}

TautMonomial TautMonomial::with_theta(int power) const {
  TautMonomial m = *this;
  m.theta_ = power;
  return m;
}

std::string TautMonomial::to_string() const {
  std::string out;
  auto append = [&out](const std::string& piece) {
    if (!out.empty()) out += '*';
    out += piece;
  };
  for (int i = 1; i <= 3; ++i) {
    if (has_eta(i)) append("eta" + std::to_string(i));
  }
  for (int s = 0; s < 6; ++s) {
    if ((gamma_mask_ >> s) & 1U) {
      append("gamma" + std::to_string(kSlots[s].first) + std::to_string(kSlots[s].second));
    }
  }
  if (theta_ == 1) append("theta");
  if (theta_ > 1) append("theta^" + std::to_string(theta_));
  return out.empty() ? "1" : out;
}

class MonomialReducer {
 public:
  MonomialReducer(int theta, std::uint8_t eta_mask, int genus)
      : theta_(theta), eta_mask_(eta_mask), genus_(genus) {}

  void add_gamma(int slot) { ++counts_[slot]; }

  std::optional<ScaledMonomial> reduce() {
    while (true) {
      if (!apply_shared_index()) return std::nullopt;
      if (changed_) continue;
      if (!apply_square()) return std::nullopt;
      if (changed_) continue;
      break;
    }
    // eta_i gamma_il = 0
    for (int s = 0; s < 6; ++s) {
      if (counts_[s] == 0) continue;
      auto [a, b] = kSlots[s];
      if (has_eta(a) || (b != kPicIndex && has_eta(b))) return std::nullopt;
    }
    TautMonomial m;
    m.theta_ = theta_;
    m.eta_mask_ = eta_mask_;
    for (int s = 0; s < 6; ++s) {
      if (counts_[s] == 1) m.gamma_mask_ = static_cast<std::uint8_t>(m.gamma_mask_ | (1U << s));
    }
    // Pic has real dimension 2g; each gamma_i4 carries one odd class there.
    if (2 * theta_ + counts_[2] + counts_[4] + counts_[5] > 2 * genus_) return std::nullopt;
    return ScaledMonomial{factor_, m};
  }

 private:
  bool has_eta(int i) const { return (eta_mask_ >> i) & 1U; }

  // Returns false when the product vanishes (an eta appears twice).
  bool add_eta(int i) {
    if (has_eta(i)) return false;
    eta_mask_ = static_cast<std::uint8_t>(eta_mask_ | (1U << i));
    return true;
  }

  // gamma_ij gamma_il = eta_i gamma_jl
  bool apply_shared_index() {
    changed_ = false;
    for (int a = 0; a < 6; ++a) {
      if (counts_[a] == 0) continue;
      for (int b = a + 1; b < 6; ++b) {
        if (counts_[b] == 0) continue;
        const int i = shared_curve_index(a, b);
        if (i == 0) continue;
        --counts_[a];
        --counts_[b];
        ++counts_[pair_slot(other_end(a, i), other_end(b, i))];
        changed_ = true;
        return add_eta(i);
      }
    }
    return true;
  }

  // gamma_ij^2 = -2g eta_i eta_j, gamma_i4^2 = -2 eta_i theta
  bool apply_square() {
    changed_ = false;
    for (int s = 0; s < 6; ++s) {
      if (counts_[s] < 2) continue;
      counts_[s] -= 2;
      changed_ = true;
      auto [i, j] = kSlots[s];
      if (j == kPicIndex) {
        factor_ *= -2;
        ++theta_;
        return add_eta(i);
      }
      factor_ *= -2L * genus_;
      return add_eta(i) && add_eta(j);
    }
    return true;
  }

  int theta_;
  std::uint8_t eta_mask_;
  int genus_;
  std::array<int, 6> counts_{};
  long factor_ = 1;
  bool changed_ = false;
};

std::optional<ScaledMonomial> normalize_product(int theta, std::uint8_t eta_mask,
                                                std::vector<int> gamma_slots, int genus) {
  MonomialReducer reducer(theta, eta_mask, genus);
  for (int s : gamma_slots) {
    if (s < 0 || s >= 6) throw DomainError("gamma slot out of range");
    reducer.add_gamma(s);
  }
  return reducer.reduce();
}

std::optional<ScaledMonomial> multiply_monomials(const TautMonomial& a, const TautMonomial& b,
                                                 int genus) {
  if (a.eta_mask() & b.eta_mask()) return std::nullopt;
  MonomialReducer reducer(a.theta() + b.theta(),
                          static_cast<std::uint8_t>(a.eta_mask() | b.eta_mask()), genus);
  for (int s = 0; s < 6; ++s) {
    if ((a.gamma_mask() >> s) & 1U) reducer.add_gamma(s);
    if ((b.gamma_mask() >> s) & 1U) reducer.add_gamma(s);
  }
  return reducer.reduce();
}

}  // namespace tautcalc::ring
