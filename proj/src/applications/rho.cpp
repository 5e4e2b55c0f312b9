#include <algorithm>
#include <map>

#include "tautcalc/applications.hpp"

namespace tautcalc::applications {

void RamificationProfile::validate(long r, long d) const {
  if (static_cast<long>(orders.size()) != r + 1) {
    throw DomainError("a ramification profile needs r + 1 = " + std::to_string(r + 1) + " orders");
  }
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 0 || orders[i] > d) throw DomainError("vanishing order outside [0, d]");
    if (i > 0 && orders[i] <= orders[i - 1]) throw DomainError("vanishing orders must increase strictly");
  }
}

long RamificationProfile::weight() const {
  long w = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) w += orders[i] - static_cast<long>(i);
  return w;
}

void MultivanishingProfile::validate(long r, long d) const {
  if (static_cast<long>(orders.size()) != r + 1) {
    throw DomainError("a multivanishing profile needs r + 1 = " + std::to_string(r + 1) + " orders");
  }
  for (std::size_t l = 1; l < divisor_degrees.size(); ++l) {
    if (divisor_degrees[l] <= divisor_degrees[l - 1]) {
      throw DomainError("divisor degrees must increase strictly");
    }
  }
  if (!divisor_degrees.empty() && divisor_degrees.front() < 0) throw DomainError("negative divisor degree");

  std::map<long, long> count;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 0 || orders[i] > d) throw DomainError("multivanishing order outside [0, d]");
    if (i > 0 && orders[i] < orders[i - 1]) throw DomainError("multivanishing orders must not decrease");
    const bool listed =
        std::binary_search(divisor_degrees.begin(), divisor_degrees.end(), orders[i]);
    if (orders[i] != 0 && !listed) {
      throw DomainError("order " + std::to_string(orders[i]) + " is not a divisor degree");
    }
    ++count[orders[i]];
  }
  for (const auto& [level, times] : count) {
    auto next = std::upper_bound(divisor_degrees.begin(), divisor_degrees.end(), level);
    if (next == divisor_degrees.end()) continue;
    if (times > *next - level) {
      throw DomainError("order " + std::to_string(level) + " repeats more often than the chain allows");
    }
  }
}

long MultivanishingProfile::repetition_penalty() const {
  std::map<long, long> count;
  for (long a : orders) ++count[a];
  long penalty = 0;
  for (const auto& [level, times] : count) penalty += times * (times - 1) / 2;
  return penalty;
}

long rho(long g, long r, long d) {
  if (g < 0 || r < 0 || d < 0) throw DomainError("rho needs g, r, d >= 0");
  return g - (r + 1) * (g - d + r);
}

long rho_ramified(long g, long r, long d, const std::vector<RamificationProfile>& profiles) {
  long out = rho(g, r, d);
  for (const auto& p : profiles) {
    p.validate(r, d);
    out -= p.weight();
  }
  return out;
}

long rho_multivanishing(long g, long r, long d, const MultivanishingProfile& prof, SecondFactor factor) {
  if (g < 0 || r < 0 || d < 0) throw DomainError("rho needs g, r, d >= 0");
  prof.validate(r, d);
  const long second = factor == SecondFactor::kCorrected ? g - d + r : g - r + d;
  long out = g - (r + 1) * second;
  for (std::size_t j = 0; j < prof.orders.size(); ++j) out -= prof.orders[j] - static_cast<long>(j);
  return out - prof.repetition_penalty();
}

std::string to_string(LemmaCase c) {
  switch (c) {
    case LemmaCase::kI: return "I";
    case LemmaCase::kII: return "II";
    case LemmaCase::kIII: return "III";
    case LemmaCase::kIV: return "IV";
    case LemmaCase::kV: return "V";
    case LemmaCase::kVI: return "VI";
  }
  return "?";
}

long feasibility_bound(LemmaCase c, long r) { return c == LemmaCase::kIII ? -r : 0; }

bool feasibility_check(LemmaCase c, const FeasibilityData& data) {
  const long n = static_cast<long>(data.profiles.size());
  auto require = [&](bool ok) {
    if (!ok) throw DomainError("data does not fit case " + to_string(c));
  };
  switch (c) {
    case LemmaCase::kI: require(data.g == 0); break;
    case LemmaCase::kII: require(data.g == 1 && n == 1); break;
    case LemmaCase::kIII: require(data.g == 1 && n == 2); break;
    case LemmaCase::kIV:
    case LemmaCase::kV: require(data.g == 2 && n == 1); break;
    case LemmaCase::kVI: break;
  }
  return rho_ramified(data.g, data.r, data.d, data.profiles) >= feasibility_bound(c, data.r);
}

long double_cover_rho(int r) {
  if (r < 1) throw DomainError("double_cover_rho needs r >= 1");
  const long g = static_cast<long>(r) * (r + 1) / 2;
  return rho(2 * g - 1, r, 2 * g - 2);
}

}  // namespace tautcalc::applications
