#pragma once

#include <optional>

#include "vlink/budget.hpp"
#include "vlink/codes.hpp"
#include "vlink/moves.hpp"
#include "vlink/verdict.hpp"

namespace vlink {

// Budgeted move search shared by decompose and decider.
//
// Every code is identified by normal_key. Each newly discovered key costs one
// unit of budget.max_expansions; moves that would exceed budget.max_crossings
// are never generated. The run is a pure function of the inputs and of the
// budget limits; budget.threads only changes how children are computed.

struct MeetResult {
  std::optional<EquivalenceCertificate> certificate;
  SearchStats stats;
};

/// Bidirectional best-first search. The two sides expand alternately, each
/// popping its least (crossings, depth, key) code, starting with the side whose
/// start is larger by (crossings, key); the search stops at the first child
/// already discovered by the other side.
MeetResult bidirectional_search(const GaussCode& a, const GaussCode& b, const Budget& budget);

struct MinimumResult {
  GaussCode best;  // concrete end code of `trace`
  int genus = 0;
  MoveTrace trace;
  bool exhausted = false;  // every code reachable under max_crossings was seen
  std::size_t visited = 0;
  std::size_t expanded = 0;
};

/// Best-first search minimizing (Carter genus, crossings, normal key). With
/// `stop_at_genus_zero` the search ends at the first genus-0 code.
MinimumResult minimize(const GaussCode& code, const Budget& budget, bool stop_at_genus_zero = false);

}  // namespace vlink
