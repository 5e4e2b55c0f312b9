#include <algorithm>

#include "tautcalc/applications.hpp"

namespace tautcalc::applications {

std::string to_string(SequenceCase c) {
  switch (c) {
    case SequenceCase::kSecondRel: return "second-relation";
    case SequenceCase::kStronglyEven: return "strongly-even";
    case SequenceCase::kStronglyOdd: return "strongly-odd";
  }
  return "?";
}

SequenceConstraints sequence_constraints(int r, SequenceCase c) {
  if (r < 3) throw DomainError("sequence constraints need r >= 3");
  if (r > 60) throw DomainError("r too large");
  const long g = static_cast<long>(r) * (r + 1) / 2;
  SequenceConstraints out;
  out.g = g;
  out.d = 2 * g - 2;
  switch (c) {
    case SequenceCase::kSecondRel:
      out.min_first = g - r - 1;
      out.max_last = g + r - 1;
      out.min_gap = 2;
      break;
    case SequenceCase::kStronglyEven:
      out.min_first = g - r - 2;
      out.max_last = g + r - 2;
      out.even_only = true;
      break;
    case SequenceCase::kStronglyOdd:
      out.min_first = g - r - 1;
      out.max_last = g + r - 1;
      out.even_only = true;
      break;
  }
  return out;
}

namespace {

struct Search {
  int r;
  const SequenceConstraints& c;
  long hi;
  IntSequence current;
  std::vector<IntSequence> found;

  bool admissible(long v) const { return !c.even_only || v % 2 == 0; }

  void extend(long from) {
    const long slots_left = r + 1 - static_cast<long>(current.size());
    if (slots_left == 0) {
      found.push_back(current);
      return;
    }
    // Leave room for the remaining entries at the minimal gap.
    const long top = hi - (slots_left - 1) * c.min_gap;
    for (long v = from; v <= top; ++v) {
      if (!admissible(v)) continue;
      current.push_back(v);
      extend(v + c.min_gap);
      current.pop_back();
    }
  }
};

}  // namespace

std::vector<IntSequence> enumerate_sequences(int r, const SequenceConstraints& constraints) {
  if (constraints.min_gap < 1) throw DomainError("sequences increase strictly");
  Search s{r, constraints, std::min(constraints.d, constraints.max_last), {}, {}};
  s.extend(std::max(0L, constraints.min_first));
  return s.found;
}

RamificationProfile vanishing_sequence_solver(int r, SequenceCase c) {
  const auto found = enumerate_sequences(r, sequence_constraints(r, c));
  if (found.size() != 1) {
    throw Error(to_string(c) + " constraints at r = " + std::to_string(r) + " have " +
                std::to_string(found.size()) + " solutions, expected exactly one");
  }
  return {found.front()};
}

}  // namespace tautcalc::applications
