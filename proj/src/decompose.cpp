#include "vlink/decompose.hpp"

#include "vlink/invariants.hpp"
#include "vlink/search.hpp"

namespace vlink {

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Classical: return "classical";
    case Classification::NonClassical: return "nonclassical";
    case Classification::Unknown: return "unknown";
  }
  return "unknown";
}

std::vector<std::vector<std::size_t>> split_groups(const SurfaceDiagram& d) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& sc : d.surface_components) {
    std::vector<std::size_t> g(sc.link_components.begin(), sc.link_components.end());
    if (!g.empty()) out.push_back(std::move(g));
  }
  return out;
}

std::vector<SurfaceDiagram> split_components(const SurfaceDiagram& d) {
  for (const auto& f : d.faces)
    if (!f.is_disk()) throw SurfaceError("split_components needs a cellular diagram");
  std::vector<SurfaceDiagram> out;
  for (const auto& g : split_groups(d)) out.push_back(carter_embed(sublink(d.code, g)));
  return out;
}

std::optional<Obstruction> classical_obstruction(const GaussCode& code, unsigned threads) {
  if (code.component_count() == 1) {
    if (int w = odd_writhe(code); w != 0) return Obstruction{"odd_writhe", std::to_string(w)};
  }
  const auto m = linking_matrix(code);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m[i][j].over_sum != m[j][i].over_sum) return Obstruction{"linking_matrix", to_string(m)};
  const auto f = f_polynomial(code, threads);
  const int residue = static_cast<int>(2 * (code.component_count() - 1) % 4);
  for (const auto& [e, c] : f.terms())
    if (((e % 4) + 4) % 4 != residue) return Obstruction{"f_polynomial", f.to_string()};
  return std::nullopt;
}

ClassicalResult classify_classical(const GaussCode& code, const Budget& budget, const ClassifyOptions& options) {
  require_valid(code);
  ClassicalResult r;
  r.trace.start = code;
  if (carter_genus(code) == 0) {
    r.classification = Classification::Classical;
    return r;
  }
  if (options.obstructions) {
    if (auto o = classical_obstruction(code, budget.threads)) {
      r.classification = Classification::NonClassical;
      r.obstruction = std::move(o);
      return r;
    }
  }
  auto m = minimize(code, budget, true);
  r.visited = m.visited;
  if (m.genus == 0) {
    r.classification = Classification::Classical;
    r.trace = std::move(m.trace);
  }
  return r;
}

SplitDecomposition decompose(const GaussCode& code, unsigned threads) {
  const auto d = destabilize_fully(carter_embed(code));
  SplitDecomposition out;
  for (const auto& g : split_groups(d)) {
    Part p;
    p.code = sublink(code, g);
    p.components = g;
    p.classical = classify_classical(p.code, Budget{0, 0, threads});
    out.parts.push_back(std::move(p));
  }
  return out;
}

Verdict compare_classical(const GaussCode& a, const GaussCode& b, const Budget& budget) {
  require_valid(a);
  require_valid(b);
  Verdict v;
  v.budget = budget;
  if (normal_key(a) != normal_key(b)) {
    if (auto d = first_difference(a, b, budget.threads)) {
      v.kind = VerdictKind::Distinct;
      v.witness = DistinctWitness{d->invariant, {}, d->value_a, d->value_b};
      return v;
    }
  }
  auto meet = bidirectional_search(a, b, budget);
  v.explored = meet.stats;
  if (meet.certificate) {
    v.kind = VerdictKind::Equivalent;
    v.equivalence = std::move(meet.certificate);
  } else {
    v.kind = VerdictKind::Unknown;
    v.note = "no invariant separates the inputs and the search found no joining trace within budget; completeness is not claimed";
  }
  return v;
}

}  // namespace vlink
