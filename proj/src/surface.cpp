#include "vlink/surface.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <sstream>

namespace vlink {

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

// Counterclockwise dart order around a crossing, starting at over-out.
std::array<int, 4> rotation_order(int sign) {
  if (sign > 0) return {OverOut, UnderOut, OverIn, UnderIn};
  return {OverOut, UnderIn, OverIn, UnderOut};
}

int out_role(Passage p) { return p == Passage::Over ? OverOut : UnderOut; }
int in_role(Passage p) { return p == Passage::Over ? OverIn : UnderIn; }

struct Skeleton {
  std::vector<CrossingInfo> crossings;
  std::vector<int> rotation_next, rotation_prev, opposite, component_start, free_loops;
};

Skeleton build_skeleton(const GaussCode& code) {
  require_valid(code);
  Skeleton s;
  std::map<std::uint32_t, int> sign_of;
  for (const auto& w : code.components())
    for (const auto& sym : w) sign_of[sym.label] = sym.sign;
  std::map<std::uint32_t, int> index;
  for (const auto& [label, sign] : sign_of) {
    index[label] = static_cast<int>(s.crossings.size());
    s.crossings.push_back({label, sign});
  }
  const int darts = static_cast<int>(4 * s.crossings.size());
  s.rotation_next.assign(darts, -1);
  s.rotation_prev.assign(darts, -1);
  s.opposite.assign(darts, -1);
  for (int v = 0; v < static_cast<int>(s.crossings.size()); ++v) {
    auto order = rotation_order(s.crossings[v].sign);
    for (int i = 0; i < 4; ++i) {
      int a = 4 * v + order[i], b = 4 * v + order[(i + 1) % 4];
      s.rotation_next[a] = b;
      s.rotation_prev[b] = a;
    }
  }
  for (std::size_t c = 0; c < code.component_count(); ++c) {
    const auto& w = code.component(c);
    if (w.empty()) {
      s.component_start.push_back(-1);
      s.free_loops.push_back(static_cast<int>(c));
      continue;
    }
    s.component_start.push_back(4 * index[w[0].label] + in_role(w[0].passage));
    for (std::size_t i = 0; i < w.size(); ++i) {
      const auto& a = w[i];
      const auto& b = w[(i + 1) % w.size()];
      int out = 4 * index[a.label] + out_role(a.passage);
      int in = 4 * index[b.label] + in_role(b.passage);
      s.opposite[out] = in;
      s.opposite[in] = out;
    }
  }
  return s;
}

int link_component_node(const SurfaceDiagram& d, int k) {
  // Node ids: crossings first, then free loops.
  if (d.component_start[k] >= 0) return d.component_start[k] / 4;
  auto it = std::find(d.free_loops.begin(), d.free_loops.end(), k);
  return static_cast<int>(d.crossings.size()) + static_cast<int>(it - d.free_loops.begin());
}

int side_node(const SurfaceDiagram& d, int side) {
  if (side < d.dart_count()) return side / 4;
  return static_cast<int>(d.crossings.size()) + (side - d.dart_count()) / 2;
}

// Recomputes surface components and their genera from the face data.
void recompute_components(SurfaceDiagram& d) {
  const int nodes = static_cast<int>(d.crossings.size() + d.free_loops.size());
  const int faces = static_cast<int>(d.faces.size());
  DisjointSets sets(nodes + faces);
  for (int f = 0; f < faces; ++f)
    for (const auto& w : d.faces[f].walks)
      for (int side : w) sets.unite(nodes + f, side_node(d, side));

  const int links = static_cast<int>(d.code.component_count());
  // Order: components carrying links by least link index, then bare ones.
  std::map<int, int> root_to_comp;
  std::vector<SurfaceComponent> comps;
  for (int k = 0; k < links; ++k) {
    int r = sets.find(link_component_node(d, k));
    auto [it, inserted] = root_to_comp.try_emplace(r, static_cast<int>(comps.size()));
    if (inserted) comps.emplace_back();
    comps[it->second].link_components.push_back(k);
  }
  for (int f = 0; f < faces; ++f) {
    int r = sets.find(nodes + f);
    auto [it, inserted] = root_to_comp.try_emplace(r, static_cast<int>(comps.size()));
    if (inserted) comps.emplace_back();
    d.faces[f].component = it->second;
  }
  d.link_assignment.assign(links, 0);
  for (int c = 0; c < static_cast<int>(comps.size()); ++c)
    for (int k : comps[c].link_components) d.link_assignment[k] = c;

  std::vector<int> chi(comps.size(), 0);
  for (std::size_t v = 0; v < d.crossings.size(); ++v) chi[root_to_comp[sets.find(static_cast<int>(v))]] -= 1;
  for (const auto& f : d.faces) chi[f.component] += f.euler();
  for (std::size_t c = 0; c < comps.size(); ++c) comps[c].genus = (2 - chi[c]) / 2;
  d.surface_components = std::move(comps);
}

// Rotates walks to their least dart, sorts walks and faces, recomputes components.
void normalize(SurfaceDiagram& d) {
  for (auto& f : d.faces) {
    for (auto& w : f.walks)
      if (!w.empty()) std::rotate(w.begin(), std::min_element(w.begin(), w.end()), w.end());
    std::sort(f.walks.begin(), f.walks.end());
  }
  std::stable_sort(d.faces.begin(), d.faces.end(), [](const Face& a, const Face& b) {
    int ka = a.walks.empty() ? INT_MAX : a.walks.front().front();
    int kb = b.walks.empty() ? INT_MAX : b.walks.front().front();
    return ka < kb;
  });
  recompute_components(d);
}

void require_face(const SurfaceDiagram& d, int face) {
  if (face < 0 || face >= static_cast<int>(d.faces.size()))
    throw SurfaceError("invalid face reference " + std::to_string(face));
}

}  // namespace

int SurfaceDiagram::rotation_prev(int dart) const {
  const int base = dart - dart % 4;
  for (int i = 0; i < 4; ++i)
    if (rotation_next[base + i] == dart) return base + i;
  throw SurfaceError("dart without rotation predecessor");
}

std::vector<int> SurfaceDiagram::crossing_components() const {
  std::vector<int> out(crossings.size(), -1);
  for (std::size_t k = 0; k < component_start.size(); ++k) {
    if (component_start[k] < 0) continue;
    int d = component_start[k];
    do {
      out[d / 4] = link_assignment[k];
      d = opposite[d + 1];  // out-dart of the same strand is in-dart + 1
    } while (d != component_start[k]);
  }
  return out;
}

SurfaceDiagram carter_embed(const GaussCode& code) {
  Skeleton s = build_skeleton(code);
  SurfaceDiagram d;
  d.code = code;
  d.crossings = std::move(s.crossings);
  d.rotation_next = std::move(s.rotation_next);
  d.opposite = std::move(s.opposite);
  d.component_start = std::move(s.component_start);
  d.free_loops = std::move(s.free_loops);

  const int darts = d.dart_count();
  std::vector<char> used(darts, 0);
  for (int start = 0; start < darts; ++start) {
    if (used[start]) continue;
    Walk w;
    int x = start;
    do {
      used[x] = 1;
      w.push_back(x);
      x = s.rotation_prev[d.opposite[x]];
    } while (x != start);
    d.faces.push_back(Face{{std::move(w)}, 0, 0});
  }
  for (std::size_t j = 0; j < d.free_loops.size(); ++j) {
    d.faces.push_back(Face{{{darts + 2 * static_cast<int>(j)}}, 0, 0});
    d.faces.push_back(Face{{{darts + 2 * static_cast<int>(j) + 1}}, 0, 0});
  }
  normalize(d);
  return d;
}

GaussCode read_gauss(const SurfaceDiagram& d) {
  std::vector<Word> comps;
  for (int start : d.component_start) {
    Word w;
    if (start >= 0) {
      int x = start;
      do {
        const auto& c = d.crossings[x / 4];
        w.push_back({c.label, x % 4 == OverIn ? Passage::Over : Passage::Under, c.sign});
        x = d.opposite[x + 1];
      } while (x != start);
    }
    comps.push_back(std::move(w));
  }
  return GaussCode(std::move(comps));
}

std::vector<int> supporting_genus(const SurfaceDiagram& d) {
  std::vector<int> g;
  for (const auto& c : d.surface_components) g.push_back(c.genus);
  return g;
}

int carter_genus(const GaussCode& code) {
  Skeleton s = build_skeleton(code);
  const int v = static_cast<int>(s.crossings.size());
  if (v == 0) return 0;
  DisjointSets sets(v);
  for (int x = 0; x < 4 * v; ++x) sets.unite(x / 4, s.opposite[x] / 4);
  int graph_components = 0;
  for (int i = 0; i < v; ++i) graph_components += sets.find(i) == i;
  std::vector<char> used(4 * v, 0);
  int faces = 0;
  for (int start = 0; start < 4 * v; ++start) {
    if (used[start]) continue;
    ++faces;
    for (int x = start; !used[x]; x = s.rotation_prev[s.opposite[x]]) used[x] = 1;
  }
  // Per component chi = V - E + F with E = 2V.
  return (2 * graph_components - faces + v) / 2;
}

std::vector<std::string> check_diagram(const SurfaceDiagram& d, bool require_nonempty) {
  std::vector<std::string> problems;
  const int sides = d.side_count();
  std::vector<int> uses(sides, 0);
  for (std::size_t f = 0; f < d.faces.size(); ++f) {
    const auto& face = d.faces[f];
    if (face.genus < 0) problems.push_back("face " + std::to_string(f) + " has negative genus");
    for (const auto& w : face.walks) {
      if (w.empty()) problems.push_back("face " + std::to_string(f) + " has an empty walk");
      for (std::size_t i = 0; i < w.size(); ++i) {
        int x = w[i];
        if (x < 0 || x >= sides) {
          problems.push_back("face " + std::to_string(f) + " references unknown dart " + std::to_string(x));
          continue;
        }
        ++uses[x];
        if (x < d.dart_count()) {
          int expect = d.walk_next(x);
          if (w[(i + 1) % w.size()] != expect)
            problems.push_back("face " + std::to_string(f) + " walk is not closed at dart " + std::to_string(x));
        } else if (w.size() != 1) {
          problems.push_back("face " + std::to_string(f) + " mixes a free-loop side into a longer walk");
        }
      }
    }
  }
  for (int x = 0; x < sides; ++x)
    if (uses[x] != 1) problems.push_back("dart side " + std::to_string(x) + " used " + std::to_string(uses[x]) + " times");

  std::vector<int> chi(d.surface_components.size(), 0);
  auto owner = d.crossing_components();
  for (int c : owner) {
    if (c < 0 || c >= static_cast<int>(chi.size())) problems.push_back("crossing without surface component");
    else chi[c] -= 1;
  }
  for (const auto& f : d.faces) {
    if (f.component < 0 || f.component >= static_cast<int>(chi.size())) problems.push_back("face without surface component");
    else chi[f.component] += f.euler();
  }
  for (std::size_t c = 0; c < chi.size(); ++c) {
    const auto& comp = d.surface_components[c];
    if (chi[c] != 2 - 2 * comp.genus || comp.genus < 0)
      problems.push_back("Euler law fails on surface component " + std::to_string(c) + ": chi=" + std::to_string(chi[c]) +
                         " genus=" + std::to_string(comp.genus));
    if (require_nonempty && comp.link_components.empty())
      problems.push_back("surface component " + std::to_string(c) + " carries no link component");
  }
  if (read_gauss(d) != d.code) problems.push_back("Gauss code read back differs from the carried code");
  return problems;
}

SurfaceDiagram stabilize(const SurfaceDiagram& d, int face, StabilizeKind kind, int other_face) {
  require_face(d, face);
  SurfaceDiagram out = d;
  if (kind == StabilizeKind::AddHandle) {
    out.faces[face].genus += 1;
  } else {
    require_face(d, other_face);
    if (other_face == face) throw SurfaceError("tube needs two distinct faces");
    Face& target = out.faces[face];
    Face& source = out.faces[other_face];
    target.genus += source.genus;
    for (auto& w : source.walks) target.walks.push_back(std::move(w));
    out.faces.erase(out.faces.begin() + other_face);
  }
  recompute_components(out);
  return out;
}

SurfaceDiagram destabilize_fully(const SurfaceDiagram& d) {
  SurfaceDiagram out = d;
  // Non-separating compressions, one handle at a time.
  for (auto& f : out.faces)
    while (f.genus > 0) f.genus -= 1;
  // Separating compressions cut a multi-walk face into one disk per walk.
  std::vector<Face> faces;
  for (auto& f : out.faces) {
    if (f.walks.size() <= 1) {
      faces.push_back(std::move(f));
      continue;
    }
    for (auto& w : f.walks) faces.push_back(Face{{std::move(w)}, 0, 0});
  }
  out.faces = std::move(faces);
  normalize(out);
  return drop_empty_components(out);
}

SurfaceDiagram drop_empty_components(const SurfaceDiagram& d) {
  SurfaceDiagram out = d;
  std::vector<Face> kept;
  for (auto& f : out.faces)
    if (!out.surface_components[f.component].link_components.empty()) kept.push_back(std::move(f));
  if (out.code.component_count() == 0) throw SurfaceError("diagram carries no link component");
  out.faces = std::move(kept);
  normalize(out);
  return out;
}

SurfaceDiagram with_bare_component(const SurfaceDiagram& d, int genus) {
  if (genus < 0) throw SurfaceError("negative genus");
  SurfaceDiagram out = d;
  // A closed surface is a single face with no boundary.
  out.faces.push_back(Face{{}, genus, 0});
  recompute_components(out);
  return out;
}

namespace {

std::string encode(const SurfaceDiagram& d, bool with_labels) {
  // Vertex order: first appearance of each crossing along the link.
  std::vector<int> order;
  std::vector<char> seen(d.crossings.size(), 0);
  for (int start : d.component_start) {
    if (start < 0) continue;
    int x = start;
    do {
      if (!seen[x / 4]) {
        seen[x / 4] = 1;
        order.push_back(x / 4);
      }
      x = d.opposite[x + 1];
    } while (x != start);
  }
  std::vector<int> new_index(d.crossings.size());
  for (std::size_t i = 0; i < order.size(); ++i) new_index[order[i]] = static_cast<int>(i);
  auto map_side = [&](int x) { return x < d.dart_count() ? 4 * new_index[x / 4] + x % 4 : x; };

  std::ostringstream os;
  os << "V";
  for (int v : order) {
    os << ' ';
    if (with_labels) os << d.crossings[v].label << ':';
    os << (d.crossings[v].sign > 0 ? '+' : '-');
  }
  os << "\nR";
  for (int v : order)
    for (int r = 0; r < 4; ++r) os << ' ' << map_side(d.rotation_next[4 * v + r]);
  os << "\nA";
  for (int v : order)
    for (int r = 0; r < 4; ++r) os << ' ' << map_side(d.opposite[4 * v + r]);
  os << "\nS";
  for (int s : d.component_start) os << ' ' << (s < 0 ? -1 : map_side(s));
  os << "\nL";
  for (int k : d.free_loops) os << ' ' << k;

  std::vector<std::string> faces;
  for (const auto& f : d.faces) {
    std::vector<Walk> walks;
    for (const auto& w : f.walks) {
      Walk m;
      for (int x : w) m.push_back(map_side(x));
      if (!m.empty()) std::rotate(m.begin(), std::min_element(m.begin(), m.end()), m.end());
      walks.push_back(std::move(m));
    }
    std::sort(walks.begin(), walks.end());
    std::ostringstream fs;
    fs << "g=" << f.genus << " c=" << f.component;
    for (const auto& w : walks) {
      fs << " (";
      for (std::size_t i = 0; i < w.size(); ++i) fs << (i ? " " : "") << w[i];
      fs << ')';
    }
    faces.push_back(fs.str());
  }
  std::sort(faces.begin(), faces.end());
  for (const auto& f : faces) os << "\nF " << f;
  for (std::size_t c = 0; c < d.surface_components.size(); ++c) {
    os << "\nC" << c << " g=" << d.surface_components[c].genus << " links";
    for (int k : d.surface_components[c].link_components) os << ' ' << k;
  }
  os << '\n';
  return os.str();
}

}  // namespace

std::string signature(const SurfaceDiagram& d) { return encode(d, false); }

bool isomorphic(const SurfaceDiagram& a, const SurfaceDiagram& b) { return signature(a) == signature(b); }

std::string dump(const SurfaceDiagram& d) { return "code " + serialize_gauss(d.code) + "\n" + encode(d, true); }

}  // namespace vlink
