#pragma once

#include "vlink/budget.hpp"
#include "vlink/codes.hpp"
#include "vlink/moves.hpp"
#include "vlink/verdict.hpp"

namespace vlink {

struct CanonicalMinimum {
  GaussCode code;  // normal form of the best code found
  int genus = 0;
  MoveTrace trace;         // replays from the input to a spelling of `code`
  bool exhausted = false;  // true: minimum over everything under max_crossings
  std::size_t visited = 0;
};

/// Least (Carter genus, crossings, normal key) code found by budgeted search.
CanonicalMinimum canonical_minimum(const GaussCode& code, const Budget& budget);

/// max_crossings = largest input + 4, max_expansions = 200000.
Budget default_budget(const GaussCode& a, const GaussCode& b);

/// Three-valued equivalence test of two ordered, oriented virtual links.
/// Equivalent and Distinct verdicts carry certificates; Unknown does not.
Verdict decide(const GaussCode& a, const GaussCode& b, const Budget& budget);

/// Replays both traces of an Equivalent verdict against the inputs.
TraceCheck check_certificate(const GaussCode& a, const GaussCode& b, const EquivalenceCertificate& cert);

/// Recomputes a Distinct witness on the inputs.
bool check_witness(const GaussCode& a, const GaussCode& b, const DistinctWitness& w);

}  // namespace vlink
