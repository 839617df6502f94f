#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vlink/budget.hpp"
#include "vlink/codes.hpp"
#include "vlink/moves.hpp"

namespace vlink {

enum class VerdictKind { Equivalent, Distinct, Unknown };
std::string to_string(VerdictKind kind);

/// Replaying from_a and from_b ends at codes with the same normal form as
/// `meeting`.
struct EquivalenceCertificate {
  MoveTrace from_a;
  MoveTrace from_b;
  GaussCode meeting;
};

/// The named invariant of sublink(a, components) and sublink(b, components)
/// takes the two recorded values; empty `components` means the whole links.
struct DistinctWitness {
  std::string invariant;
  std::vector<std::size_t> components;
  std::string value_a, value_b;
};

struct SearchStats {
  std::size_t visited_a = 0, visited_b = 0;    // codes discovered, starts excluded
  std::size_t expanded_a = 0, expanded_b = 0;  // codes whose moves were enumerated
  int min_genus_a = -1, min_genus_b = -1;      // least Carter genus seen on each side
  bool exhausted_a = false, exhausted_b = false;
  std::size_t visited() const noexcept { return visited_a + visited_b; }
};

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::optional<EquivalenceCertificate> equivalence;
  std::optional<DistinctWitness> witness;
  SearchStats explored;
  Budget budget;
  std::string note;
};

}  // namespace vlink
