#pragma once

// Test-only generators and independent oracles. Nothing here calls into the
// code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "vlink/codes.hpp"

namespace vlink::testing {

inline GaussCode code(const char* text) { return parse_gauss(text); }

inline constexpr const char* kUnknot = "0";
inline constexpr const char* kKink = "O1+U1+";
inline constexpr const char* kTrefoil = "O1+U2+O3+U1+O2+U3+";
inline constexpr const char* kMirrorTrefoil = "O1-U2-O3-U1-O2-U3-";
inline constexpr const char* kVirtualTrefoil = "O1+O2+U1+U2+";
inline constexpr const char* kHopf = "O1+U2+/U1+O2+";
inline constexpr const char* kVirtualHopf = "O1+/U1+";
inline constexpr const char* kFigureEight = "O1-U2+O3-U4+O2+U1-O4+U3-";

/// Uniformly random Gauss code: every such code is a virtual link diagram.
inline GaussCode random_code(std::mt19937_64& rng, int crossings, int components) {
  std::vector<Symbol> symbols;
  for (int i = 1; i <= crossings; ++i) {
    int sign = (rng() & 1) ? 1 : -1;
    symbols.push_back({static_cast<std::uint32_t>(i), Passage::Over, sign});
    symbols.push_back({static_cast<std::uint32_t>(i), Passage::Under, sign});
  }
  std::shuffle(symbols.begin(), symbols.end(), rng);
  std::vector<Word> comps(components);
  for (std::size_t i = 0; i < symbols.size(); ++i)
    comps[i < static_cast<std::size_t>(components) ? i : rng() % components].push_back(symbols[i]);
  return GaussCode(std::move(comps));
}

/// Random knot or link with up to `max_crossings` crossings.
inline GaussCode random_small_code(std::mt19937_64& rng, int max_crossings) {
  int n = static_cast<int>(rng() % (max_crossings + 1));
  int k = 1 + static_cast<int>(rng() % 3 == 0 ? rng() % 2 + 1 : 0);
  return random_code(rng, n, k);
}

// ---------------------------------------------------------------------------
// Face-tracing oracle. Builds the rotation system straight from the stated
// convention (counterclockwise at a positive crossing: over-out, under-out,
// over-in, under-in; negative crossings swap the under pair) and counts orbits
// of rotation-after-edge, the opposite traversal direction from the library.

struct FaceCensus {
  int vertices = 0, edges = 0, faces = 0, components = 0;
  int genus_sum() const { return (2 * components - (vertices - edges + faces)) / 2; }
};

inline FaceCensus face_census(const GaussCode& c) {
  // half-edge ids: (label index, "OO","UO","OI","UI")
  std::map<std::uint32_t, int> idx;
  std::map<std::uint32_t, int> sign;
  for (const auto& w : c.components())
    for (const auto& s : w) {
      idx.try_emplace(s.label, static_cast<int>(idx.size()));
      sign[s.label] = s.sign;
    }
  const int n = static_cast<int>(idx.size());
  enum { OO, UO, OI, UI };
  std::vector<int> rot(4 * n), edge(4 * n, -1);
  for (auto [label, v] : idx) {
    std::vector<int> order = sign[label] > 0 ? std::vector<int>{OO, UO, OI, UI} : std::vector<int>{OO, UI, OI, UO};
    for (int i = 0; i < 4; ++i) rot[4 * v + order[i]] = 4 * v + order[(i + 1) % 4];
  }
  int free_loops = 0;
  for (const auto& w : c.components()) {
    if (w.empty()) ++free_loops;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const auto& a = w[i];
      const auto& b = w[(i + 1) % w.size()];
      int out = 4 * idx[a.label] + (a.passage == Passage::Over ? OO : UO);
      int in = 4 * idx[b.label] + (b.passage == Passage::Over ? OI : UI);
      edge[out] = in;
      edge[in] = out;
    }
  }
  FaceCensus fc;
  fc.vertices = n;
  fc.edges = 2 * n;
  std::vector<char> seen(4 * n, 0);
  for (int s = 0; s < 4 * n; ++s) {
    if (seen[s]) continue;
    ++fc.faces;
    for (int x = s; !seen[x]; x = rot[edge[x]]) seen[x] = 1;
  }
  // graph components by flood fill
  std::vector<int> comp(n, -1);
  for (int v = 0; v < n; ++v) {
    if (comp[v] >= 0) continue;
    std::vector<int> stack{v};
    comp[v] = fc.components;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int r = 0; r < 4; ++r) {
        int w = edge[4 * u + r] / 4;
        if (comp[w] < 0) {
          comp[w] = fc.components;
          stack.push_back(w);
        }
      }
    }
    ++fc.components;
  }
  fc.faces += 2 * free_loops;
  fc.components += free_loops;
  return fc;
}

// ---------------------------------------------------------------------------
// Parity and tally oracles.

inline int parity_odd_writhe(const Word& w) {
  int total = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i].label == w[j].label && (j - i - 1) % 2 == 1) total += w[i].sign;
  return total;
}

/// over[i][j]: sum of signs where component i passes over component j.
inline std::vector<std::vector<int>> tally_over(const GaussCode& c) {
  const std::size_t k = c.component_count();
  std::vector<std::vector<int>> m(k, std::vector<int>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (const auto& s : c.component(i)) {
      if (s.passage != Passage::Over) continue;
      for (std::size_t j = 0; j < k; ++j)
        for (const auto& t : c.component(j))
          if (t.label == s.label && t.passage == Passage::Under && i != j) m[i][j] += s.sign;
    }
  return m;
}

/// Full p^arcs enumeration of Fox colorings, arcs cut at Under passages.
inline std::uint64_t brute_force_colorings(const GaussCode& c, int p) {
  // arc id for every symbol position: increments after each Under passage.
  std::vector<std::vector<int>> arc_of(c.component_count());
  int arcs = 0;
  for (std::size_t i = 0; i < c.component_count(); ++i) {
    const Word& w = c.component(i);
    int unders = 0;
    for (const auto& s : w) unders += s.passage == Passage::Under;
    if (unders == 0) {
      arc_of[i].assign(w.size(), arcs++);
      continue;
    }
    // start counting from the first Under passage
    std::size_t first = 0;
    while (w[first].passage != Passage::Under) ++first;
    arc_of[i].assign(w.size(), -1);
    int current = arcs + unders - 1;
    for (std::size_t step = 0; step < w.size(); ++step) {
      std::size_t pos = (first + step) % w.size();
      if (w[pos].passage == Passage::Under) current = (current - arcs + 1) % unders + arcs;
      arc_of[i][pos] = current;  // an Under passage is tagged with its outgoing arc
    }
    arcs += unders;
  }
  struct Rel {
    int over, in, out;
  };
  std::vector<Rel> rels;
  std::map<std::uint32_t, int> over_arc;
  std::map<std::uint32_t, std::pair<int, int>> under;
  for (std::size_t i = 0; i < c.component_count(); ++i) {
    const Word& w = c.component(i);
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      if (w[pos].passage == Passage::Over) {
        over_arc[w[pos].label] = arc_of[i][pos];
      } else {
        int in = arc_of[i][(pos + w.size() - 1) % w.size()];
        under[w[pos].label] = {in, arc_of[i][pos]};
      }
    }
  }
  for (auto& [l, io] : under) rels.push_back({over_arc[l], io.first, io.second});
  std::uint64_t total = 0;
  std::vector<int> col(arcs, 0);
  std::uint64_t combos = 1;
  for (int i = 0; i < arcs; ++i) combos *= p;
  for (std::uint64_t x = 0; x < combos; ++x) {
    std::uint64_t y = x;
    for (int i = 0; i < arcs; ++i) {
      col[i] = static_cast<int>(y % p);
      y /= p;
    }
    bool ok = true;
    for (const auto& r : rels)
      if (((2 * col[r.over] - col[r.in] - col[r.out]) % p + p) % p != 0) ok = false;
    total += ok;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Geometric R3 oracle: three oriented straight lines at three heights. Returns
// the set of (top_first, middle_first, bottom_first, s_tm, s_tb, s_mb) that
// occur for random line arrangements.

using ShapeTuple = std::tuple<bool, bool, bool, int, int, int>;

inline std::set<ShapeTuple> geometric_triangle_shapes(int trials = 4000) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(0, 2 * M_PI), off(-1, 1);
  std::set<ShapeTuple> out;
  auto cross = [](double ax, double ay, double bx, double by) { return ax * by - ay * bx; };
  for (int t = 0; t < trials; ++t) {
    double px[3], py[3], dx[3], dy[3];
    for (int i = 0; i < 3; ++i) {
      double a = angle(rng);
      dx[i] = std::cos(a);
      dy[i] = std::sin(a);
      px[i] = off(rng);
      py[i] = off(rng);
    }
    bool degenerate = false;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (std::abs(cross(dx[i], dy[i], dx[j], dy[j])) < 1e-3) degenerate = true;
    if (degenerate) continue;
    int perm[3] = {0, 1, 2};
    std::shuffle(perm, perm + 3, rng);
    const int T = perm[0], M = perm[1], B = perm[2];
    // parameter along line i where it meets line j
    auto meet = [&](int i, int j) {
      return cross(px[j] - px[i], py[j] - py[i], dx[j], dy[j]) / cross(dx[i], dy[i], dx[j], dy[j]);
    };
    auto sgn = [&](int over, int under) { return cross(dx[over], dy[over], dx[under], dy[under]) > 0 ? 1 : -1; };
    out.insert({meet(T, M) < meet(T, B), meet(M, T) < meet(M, B), meet(B, T) < meet(B, M), sgn(T, M), sgn(T, B),
                sgn(M, B)});
  }
  return out;
}

}  // namespace vlink::testing
