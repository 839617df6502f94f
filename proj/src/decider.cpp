#include "vlink/decider.hpp"

#include <algorithm>
#include <numeric>

#include "vlink/decompose.hpp"
#include "vlink/invariants.hpp"
#include "vlink/search.hpp"
#include "vlink/surface.hpp"

namespace vlink {

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Equivalent: return "equivalent";
    case VerdictKind::Distinct: return "distinct";
    case VerdictKind::Unknown: return "unknown";
  }
  return "unknown";
}

CanonicalMinimum canonical_minimum(const GaussCode& code, const Budget& budget) {
  require_valid(code);
  auto m = minimize(code, budget);
  return CanonicalMinimum{normal_form(m.best), m.genus, std::move(m.trace), m.exhausted, m.visited};
}

Budget default_budget(const GaussCode& a, const GaussCode& b) {
  return Budget{std::max(a.crossing_count(), b.crossing_count()) + 4, 200000, 1};
}

namespace {

std::string part_summary(const std::vector<std::vector<std::size_t>>& groups,
                         const std::vector<ClassicalResult>& classes) {
  std::string out;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (i) out += ", ";
    out += "{";
    for (std::size_t j = 0; j < groups[i].size(); ++j) out += (j ? "," : "") + std::to_string(groups[i][j]);
    out += "}:" + to_string(classes[i].classification);
  }
  return out;
}

}  // namespace

Verdict decide(const GaussCode& a, const GaussCode& b, const Budget& budget) {
  require_valid(a);
  require_valid(b);
  Verdict v;
  v.budget = budget;
  auto distinct = [&](std::string invariant, std::vector<std::size_t> comps, std::string va, std::string vb) {
    if (comps.size() == a.component_count()) comps.clear();
    v.kind = VerdictKind::Distinct;
    v.witness = DistinctWitness{std::move(invariant), std::move(comps), std::move(va), std::move(vb)};
    return v;
  };

  if (normal_key(a) == normal_key(b)) {
    v.kind = VerdictKind::Equivalent;
    v.equivalence = EquivalenceCertificate{MoveTrace{a, {}}, MoveTrace{b, {}}, a};
    return v;
  }
  if (a.component_count() != b.component_count())
    return distinct("component_count", {}, std::to_string(a.component_count()), std::to_string(b.component_count()));

  // Minimal representatives, split parts, classical parts.
  const auto da = destabilize_fully(carter_embed(a));
  const auto db = destabilize_fully(carter_embed(b));
  const auto ga = split_groups(da);
  const auto gb = split_groups(db);
  const Budget no_search{budget.max_crossings, 0, budget.threads};
  auto classify = [&](const GaussCode& c, const std::vector<std::vector<std::size_t>>& groups) {
    std::vector<ClassicalResult> out;
    for (const auto& g : groups) out.push_back(classify_classical(sublink(c, g), no_search));
    return out;
  };
  const auto ca = classify(a, ga);
  const auto cb = classify(b, gb);

  for (std::size_t i = 0; i < ga.size(); ++i) {
    auto j = std::find(gb.begin(), gb.end(), ga[i]);
    if (j == gb.end()) continue;
    if (ca[i].classification != Classification::Classical ||
        cb[j - gb.begin()].classification != Classification::Classical)
      continue;
    auto part = compare_classical(sublink(a, ga[i]), sublink(b, ga[i]), no_search);
    if (part.kind == VerdictKind::Distinct)
      return distinct(part.witness->invariant, ga[i], part.witness->value_a, part.witness->value_b);
  }

  // Invariants of the whole links and of every part on either side.
  std::vector<std::vector<std::size_t>> sets(1, std::vector<std::size_t>(a.component_count()));
  std::iota(sets[0].begin(), sets[0].end(), 0);
  for (const auto* groups : {&ga, &gb})
    for (const auto& g : *groups)
      if (std::find(sets.begin(), sets.end(), g) == sets.end()) sets.push_back(g);
  for (const auto& s : sets)
    if (auto d = first_difference(sublink(a, s), sublink(b, s), budget.threads))
      return distinct(d->invariant, s, d->value_a, d->value_b);

  // Meet in the middle.
  auto meet = bidirectional_search(a, b, budget);
  v.explored = meet.stats;
  if (meet.certificate) {
    v.kind = VerdictKind::Equivalent;
    v.equivalence = std::move(meet.certificate);
    return v;
  }
  v.kind = VerdictKind::Unknown;
  v.note = "completeness is not claimed: invariants agree and no joining trace was found within budget; parts a: " +
           part_summary(ga, ca) + "; parts b: " + part_summary(gb, cb);
  return v;
}

TraceCheck check_certificate(const GaussCode& a, const GaussCode& b, const EquivalenceCertificate& cert) {
  TraceCheck bad;
  if (!(cert.from_a.start == a) || !(cert.from_b.start == b)) {
    bad.message = "certificate traces do not start at the inputs";
    return bad;
  }
  if (auto r = verify_trace(cert.from_a, cert.meeting); !r) {
    r.message = "trace from a: " + r.message;
    return r;
  }
  if (auto r = verify_trace(cert.from_b, cert.meeting); !r) {
    r.message = "trace from b: " + r.message;
    return r;
  }
  return TraceCheck{true, -1, ""};
}

bool check_witness(const GaussCode& a, const GaussCode& b, const DistinctWitness& w) {
  try {
    GaussCode sa = a, sb = b;
    if (!w.components.empty()) {
      sa = sublink(a, w.components);
      sb = sublink(b, w.components);
    }
    auto va = invariant_value(sa, w.invariant);
    auto vb = invariant_value(sb, w.invariant);
    return va && vb && *va == w.value_a && *vb == w.value_b && w.value_a != w.value_b;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace vlink
