#include "vlink/invariants.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

namespace vlink {

LaurentPoly LaurentPoly::monomial(int exponent, Coeff coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

LaurentPoly::Coeff LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_exponent() const { return is_zero() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_exponent() const { return is_zero() ? 0 : terms_.rbegin()->first; }

LaurentPoly& LaurentPoly::add_term(int exponent, Coeff c) {
  if (c == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly r = monomial(0);
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const Coeff mag = c < 0 ? -c : c;
    if (e == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << 'A';
      if (e != 1) os << '^' << e;
    }
    first = false;
  }
  return os.str();
}

LaurentPoly loop_value() { return LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1); }

namespace {

enum : int { kOverIn = 0, kOverOut = 1, kUnderIn = 2, kUnderOut = 3 };

// Crossings (by label order) with the strand-edge pairing between passage ends.
struct StrandGraph {
  std::vector<int> signs;
  std::vector<int> edge;  // dart -> dart at the other end of its edge
  int free_components = 0;
};

StrandGraph strand_graph(const GaussCode& code) {
  require_valid(code);
  StrandGraph g;
  std::map<std::uint32_t, int> index;
  for (const auto& w : code.components())
    for (const auto& s : w) index.try_emplace(s.label, 0);
  int next = 0;
  for (auto& [label, i] : index) i = next++;
  g.signs.assign(index.size(), 1);
  g.edge.assign(4 * index.size(), -1);
  for (const auto& w : code.components()) {
    if (w.empty()) {
      ++g.free_components;
      continue;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      const auto& a = w[i];
      const auto& b = w[(i + 1) % w.size()];
      g.signs[index[a.label]] = a.sign;
      int out = 4 * index[a.label] + (a.passage == Passage::Over ? kOverOut : kUnderOut);
      int in = 4 * index[b.label] + (b.passage == Passage::Over ? kOverIn : kUnderIn);
      g.edge[out] = in;
      g.edge[in] = out;
    }
  }
  return g;
}

// Pairing of the four darts at a crossing after smoothing. The A-smoothing
// joins the two regions swept when the over strand turns counterclockwise.
void smoothing_pairs(int sign, bool b_smoothing, std::array<std::pair<int, int>, 2>& out) {
  const bool separate_over_from_under_in = (sign > 0) != b_smoothing;
  if (separate_over_from_under_in)
    out = {{{kOverOut, kUnderIn}, {kOverIn, kUnderOut}}};
  else
    out = {{{kOverOut, kUnderOut}, {kOverIn, kUnderIn}}};
}

LaurentPoly assemble(const std::vector<std::vector<std::uint64_t>>& counts, int n) {
  // counts[b][loops]: number of states with b B-smoothings and that many loops.
  const LaurentPoly delta = loop_value();
  std::vector<LaurentPoly> delta_pow{LaurentPoly::monomial(0)};
  LaurentPoly result;
  for (int b = 0; b <= n; ++b) {
    for (std::size_t loops = 1; loops < counts[b].size(); ++loops) {
      if (counts[b][loops] == 0) continue;
      while (delta_pow.size() < loops) delta_pow.push_back(delta_pow.back() * delta);
      LaurentPoly term = LaurentPoly::monomial(n - 2 * b, static_cast<LaurentPoly::Coeff>(counts[b][loops])) * delta_pow[loops - 1];
      result += term;
    }
  }
  return result;
}

}  // namespace

LaurentPoly kauffman_bracket(const GaussCode& code, unsigned threads) {
  const StrandGraph g = strand_graph(code);
  const int n = static_cast<int>(g.signs.size());
  if (n > 30) throw InvariantError("state sum limited to 30 crossings");
  const int darts = 4 * n;
  const std::uint64_t states = std::uint64_t{1} << n;
  const std::size_t max_loops = static_cast<std::size_t>(2 * n + g.free_components + 2);

  auto run = [&](std::uint64_t begin, std::uint64_t end, std::vector<std::vector<std::uint64_t>>& counts) {
    counts.assign(n + 1, std::vector<std::uint64_t>(max_loops, 0));
    std::vector<int> smooth(darts);
    std::vector<char> seen(darts);
    std::array<std::pair<int, int>, 2> pr;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      for (int v = 0; v < n; ++v) {
        smoothing_pairs(g.signs[v], (mask >> v) & 1u, pr);
        for (auto [a, b] : pr) {
          smooth[4 * v + a] = 4 * v + b;
          smooth[4 * v + b] = 4 * v + a;
        }
      }
      std::fill(seen.begin(), seen.end(), 0);
      int loops = g.free_components;
      for (int start = 0; start < darts; ++start) {
        if (seen[start]) continue;
        ++loops;
        int x = start;
        do {
          seen[x] = 1;
          int y = g.edge[x];
          seen[y] = 1;
          x = smooth[y];
        } while (x != start);
      }
      counts[std::popcount(mask)][loops] += 1;
    }
  };

  const unsigned workers = states >= 1024 ? std::max(1u, threads) : 1u;
  std::vector<std::vector<std::vector<std::uint64_t>>> partial(workers);
  if (workers == 1) {
    run(0, states, partial[0]);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (states + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
      std::uint64_t b = std::min(states, t * chunk), e = std::min(states, b + chunk);
      pool.emplace_back(run, b, e, std::ref(partial[t]));
    }
    for (auto& th : pool) th.join();
  }
  std::vector<std::vector<std::uint64_t>> counts(n + 1, std::vector<std::uint64_t>(max_loops, 0));
  for (const auto& p : partial)
    for (int b = 0; b <= n; ++b)
      for (std::size_t l = 0; l < max_loops; ++l) counts[b][l] += p[b][l];
  return assemble(counts, n);
}

namespace {

LaurentPoly skein(std::vector<int> link, const std::vector<int>& signs, int v, int loops) {
  const int n = static_cast<int>(signs.size());
  if (v == n) {
    LaurentPoly r = LaurentPoly::monomial(0);
    const LaurentPoly delta = loop_value();
    for (int i = 1; i < loops; ++i) r = r * delta;
    return r;
  }
  LaurentPoly total;
  for (bool b_smoothing : {false, true}) {
    std::vector<int> l = link;
    int closed = loops;
    std::array<std::pair<int, int>, 2> pr;
    smoothing_pairs(signs[v], b_smoothing, pr);
    for (auto [a, b] : pr) {
      const int d1 = 4 * v + a, d2 = 4 * v + b;
      const int p1 = l[d1], p2 = l[d2];
      if (p1 == d2) {
        ++closed;
      } else {
        l[p1] = p2;
        l[p2] = p1;
      }
      l[d1] = l[d2] = -1;
    }
    total += LaurentPoly::monomial(b_smoothing ? -1 : 1) * skein(std::move(l), signs, v + 1, closed);
  }
  return total;
}

}  // namespace

LaurentPoly kauffman_bracket_skein(const GaussCode& code) {
  const StrandGraph g = strand_graph(code);
  return skein(g.edge, g.signs, 0, g.free_components);
}

LaurentPoly f_polynomial(const GaussCode& code, unsigned threads) {
  const int w = writhe(code);
  // (-A^3)^(-w) = (-1)^w A^(-3w)
  const LaurentPoly norm = LaurentPoly::monomial(-3 * w, (w % 2 == 0) ? 1 : -1);
  return norm * kauffman_bracket(code, threads);
}

int odd_writhe(const GaussCode& code) {
  require_valid(code);
  if (code.component_count() != 1) throw InvariantError("odd writhe is defined for knots only");
  const Word& w = code.component(0);
  std::map<std::uint32_t, std::size_t> first;
  int total = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto [it, inserted] = first.try_emplace(w[i].label, i);
    if (!inserted && (i - it->second - 1) % 2 == 1) total += w[i].sign;
  }
  return total;
}

LinkingMatrix linking_matrix(const GaussCode& code) {
  require_valid(code);
  const std::size_t k = code.component_count();
  LinkingMatrix m(k, std::vector<LinkingEntry>(k));
  std::map<std::uint32_t, std::pair<int, int>> over_under;  // label -> (over comp, under comp)
  std::map<std::uint32_t, int> sign;
  for (std::size_t c = 0; c < k; ++c)
    for (const auto& s : code.component(c)) {
      (s.passage == Passage::Over ? over_under[s.label].first : over_under[s.label].second) = static_cast<int>(c);
      sign[s.label] = s.sign;
    }
  for (const auto& [label, ou] : over_under) {
    auto [i, j] = ou;
    if (i == j) continue;
    m[i][j].over_sum += sign[label];
    m[j][i].under_sum += sign[label];
  }
  return m;
}

ArcStructure arc_structure(const GaussCode& code) {
  require_valid(code);
  ArcStructure a;
  std::map<std::uint32_t, int> over_arc;
  std::map<std::uint32_t, std::pair<int, int>> under_arcs;
  for (const auto& w : code.components()) {
    std::vector<int> unders;
    for (int i = 0; i < static_cast<int>(w.size()); ++i)
      if (w[i].passage == Passage::Under) unders.push_back(i);
    const int base = a.arc_count;
    if (unders.empty()) {
      a.arc_count += 1;
      for (const auto& s : w) over_arc[s.label] = base;
      continue;
    }
    const int m = static_cast<int>(unders.size());
    a.arc_count += m;
    // Arc k starts just after unders[k]; positions before unders[0] belong to arc m-1.
    int current = base + m - 1;
    int next_under = 0;
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
      if (next_under < m && i == unders[next_under]) {
        under_arcs[w[i].label] = {current, base + next_under};
        current = base + next_under;
        ++next_under;
      } else {
        over_arc[w[i].label] = current;
      }
    }
  }
  for (const auto& [label, io] : under_arcs) a.relations.push_back({over_arc.at(label), io.first, io.second});
  return a;
}

namespace {

void require_prime(int p) {
  if (p != 3 && p != 5 && p != 7) throw InvariantError("coloring modulus must be 3, 5 or 7");
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::uint64_t coloring_count_exhaustive(const GaussCode& code, int p) {
  require_prime(p);
  const ArcStructure a = arc_structure(code);
  // Each relation is checked once its highest-numbered arc is assigned.
  std::vector<std::vector<ArcStructure::Relation>> due(a.arc_count);
  for (const auto& r : a.relations) due[std::max({r.over_arc, r.in_arc, r.out_arc})].push_back(r);
  std::vector<int> color(a.arc_count, 0);
  std::uint64_t count = 0;
  auto search = [&](auto&& self, int arc) -> void {
    if (arc == a.arc_count) {
      ++count;
      return;
    }
    for (int c = 0; c < p; ++c) {
      color[arc] = c;
      bool ok = true;
      for (const auto& r : due[arc])
        if ((2 * color[r.over_arc] - color[r.in_arc] - color[r.out_arc]) % p != 0) {
          ok = false;
          break;
        }
      if (ok) self(self, arc + 1);
    }
  };
  search(search, 0);
  return count;
}

std::uint64_t coloring_count_rank(const GaussCode& code, int p) {
  require_prime(p);
  const ArcStructure a = arc_structure(code);
  std::vector<std::vector<int>> rows;
  for (const auto& r : a.relations) {
    std::vector<int> row(a.arc_count, 0);
    row[r.over_arc] = (row[r.over_arc] + 2) % p;
    row[r.in_arc] = (row[r.in_arc] + p - 1) % p;
    row[r.out_arc] = (row[r.out_arc] + p - 1) % p;
    rows.push_back(std::move(row));
  }
  auto inverse = [p](int x) {
    for (int y = 1; y < p; ++y)
      if (x * y % p == 1) return y;
    return 0;
  };
  int rank = 0;
  for (int col = 0; col < a.arc_count && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    const int inv = inverse(rows[rank][col]);
    for (int& x : rows[rank]) x = x * inv % p;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const int f = rows[r][col];
      for (int c = 0; c < a.arc_count; ++c) rows[r][c] = ((rows[r][c] - f * rows[rank][c]) % p + p) % p;
    }
    ++rank;
  }
  return ipow(static_cast<std::uint64_t>(p), a.arc_count - rank);
}

std::uint64_t coloring_count(const GaussCode& code, int p) {
  require_prime(p);
  if (arc_structure(code).arc_count <= 10) return coloring_count_exhaustive(code, p);
  return coloring_count_rank(code, p);
}

Fingerprint fingerprint(const GaussCode& code, unsigned threads) {
  require_valid(code);
  Fingerprint f;
  f.component_count = static_cast<int>(code.component_count());
  f.f_poly = f_polynomial(code, threads);
  if (code.component_count() == 1) f.odd_writhe = odd_writhe(code);
  f.linking = linking_matrix(code);
  for (int p : {3, 5, 7}) f.colorings[p] = coloring_count(code, p);
  return f;
}

std::string to_string(const LinkingMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j) out += ",";
      out += "[" + std::to_string(m[i][j].over_sum) + "," + std::to_string(m[i][j].under_sum) + "]";
    }
    out += "]";
  }
  return out + "]";
}

const std::vector<std::string>& witness_invariants() {
  static const std::vector<std::string> names{"component_count",   "odd_writhe",        "linking_matrix",
                                              "coloring_count(3)", "coloring_count(5)", "coloring_count(7)",
                                              "f_polynomial"};
  return names;
}

std::optional<std::string> invariant_value(const GaussCode& code, const std::string& name, unsigned threads) {
  if (name == "component_count") return std::to_string(code.component_count());
  if (name == "odd_writhe") {
    if (code.component_count() != 1) return std::nullopt;
    return std::to_string(odd_writhe(code));
  }
  if (name == "linking_matrix") return to_string(linking_matrix(code));
  for (int p : {3, 5, 7})
    if (name == "coloring_count(" + std::to_string(p) + ")") return std::to_string(coloring_count(code, p));
  if (name == "f_polynomial") return f_polynomial(code, threads).to_string();
  throw InvariantError("unknown invariant: " + name);
}

std::optional<InvariantDifference> first_difference(const GaussCode& a, const GaussCode& b, unsigned threads) {
  for (const auto& name : witness_invariants()) {
    auto va = invariant_value(a, name, threads);
    auto vb = invariant_value(b, name, threads);
    if (va && vb && *va != *vb) return InvariantDifference{name, *va, *vb};
  }
  return std::nullopt;
}

}  // namespace vlink
