#include "vlink/complement.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace vlink {

std::string to_string(BlockType t) {
  switch (t) {
    case BlockType::Face: return "face";
    case BlockType::Edge: return "edge";
    case BlockType::Crossing: return "crossing";
  }
  return "face";
}

long ComplementComplex::euler_characteristic() const noexcept {
  return static_cast<long>(vertex_height.size()) - static_cast<long>(edges.size()) + static_cast<long>(faces.size()) -
         static_cast<long>(cells.size());
}

namespace {

constexpr int kSize = 5;     // grid cells per block side
constexpr int kHole = 2;     // tunnel position across and in height
constexpr int kSegments = 3; // band length

struct UnionFind {
  std::vector<int> parent;
  int add() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Unit boxes removed from a crossing cube, (x, y, z) of the lower corner.
std::vector<std::array<int, 3>> over_tunnel() {
  std::vector<std::array<int, 3>> t{{0, kHole, 2}};
  for (int x = 0; x < kSize; ++x) t.push_back({x, kHole, 3});
  t.push_back({kSize - 1, kHole, 2});
  return t;
}
std::vector<std::array<int, 3>> under_tunnel() {
  std::vector<std::array<int, 3>> t{{kHole, 0, 2}};
  for (int y = 0; y < kSize; ++y) t.push_back({kHole, y, 1});
  t.push_back({kHole, kSize - 1, 2});
  return t;
}

// Point of a crossing square side (0 east, 1 north, 2 west, 3 south) at
// counterclockwise parameter t.
std::array<int, 2> side_point(int side, int t) {
  switch (side) {
    case 0: return {kSize, t};
    case 1: return {kSize - t, kSize};
    case 2: return {0, kSize - t};
    default: return {t, 0};
  }
}

class Builder {
 public:
  explicit Builder(const SurfaceDiagram& d) : d_(d) {}

  std::pair<ComplementComplex, BoundaryPattern> run();

 private:
  const SurfaceDiagram& d_;
  UnionFind uf_;
  std::vector<int> height_;  // by raw vertex
  std::vector<int> crossing_base_, band_base_;

  struct Band {
    int out_dart = -1;        // -1 for a free loop
    int in_dart = -1;
    int link_component = 0;
  };
  std::vector<Band> bands_;
  std::vector<int> band_of_out_dart_;
  std::vector<int> side_of_dart_;
  std::vector<int> passage_component_;  // dart -> link component

  // cells keyed by sorted root vertex lists
  std::map<std::vector<int>, int> face_index_;
  std::vector<std::vector<int>> face_cycles_;
  std::map<int, int> torus_tag_;  // 2-cell -> link component
  std::vector<std::vector<int>> cells_;
  struct RawBlock {
    BlockType type;
    int origin;
    std::vector<int> cells;
  };
  std::vector<RawBlock> blocks_;

  int crossing_vertex(int c, int x, int y, int z) const { return crossing_base_[c] + (x * 6 + y) * 6 + z; }
  int band_vertex(int e, int a, int z, int s) const { return band_base_[e] + (a * 6 + z) * (kSegments + 1) + s; }

  int face_id(const std::vector<int>& raw_cycle) {
    std::vector<int> cycle;
    for (int v : raw_cycle) {
      int r = uf_.find(v);
      if (cycle.empty() || cycle.back() != r) cycle.push_back(r);
    }
    while (cycle.size() > 1 && cycle.front() == cycle.back()) cycle.pop_back();
    std::vector<int> key = cycle;
    std::sort(key.begin(), key.end());
    auto [it, inserted] = face_index_.emplace(key, static_cast<int>(face_cycles_.size()));
    if (inserted) face_cycles_.push_back(std::move(cycle));
    return it->second;
  }

  // The six faces of a unit box given a vertex lookup f(i, j, k) on its corners.
  template <class F>
  std::vector<int> box_faces(F corner) {
    std::vector<int> out;
    for (int axis = 0; axis < 3; ++axis)
      for (int side = 0; side < 2; ++side) {
        std::vector<int> cyc;
        for (auto [u, v] : {std::pair{0, 0}, {1, 0}, {1, 1}, {0, 1}}) {
          int c[3];
          c[axis] = side;
          c[(axis + 1) % 3] = u;
          c[(axis + 2) % 3] = v;
          cyc.push_back(corner(c[0], c[1], c[2]));
        }
        out.push_back(face_id(cyc));
      }
    return out;
  }

  void make_vertices();
  void glue_bands();
  void crossing_cells(int c);
  void band_cells(int e);
  void face_cells(int f);
  std::vector<int> meridian(int k, const std::map<std::pair<int, int>, int>& edge_index);
};

void Builder::make_vertices() {
  const int v = static_cast<int>(d_.crossings.size());
  side_of_dart_.assign(4 * v, 0);
  for (int c = 0; c < v; ++c) {
    int x = 4 * c + OverOut;
    for (int p = 0; p < 4; ++p, x = d_.rotation_next[x]) side_of_dart_[x] = p;
  }
  // link component of every dart, and the bands in traversal order
  passage_component_.assign(4 * v, 0);
  band_of_out_dart_.assign(4 * v, -1);
  std::size_t loop = 0;
  for (std::size_t k = 0; k < d_.component_start.size(); ++k) {
    int start = d_.component_start[k];
    if (start < 0) {
      bands_.push_back(Band{-1, static_cast<int>(loop++), static_cast<int>(k)});
      continue;
    }
    int x = start;
    do {
      passage_component_[x] = passage_component_[x + 1] = static_cast<int>(k);
      band_of_out_dart_[x + 1] = static_cast<int>(bands_.size());
      bands_.push_back(Band{x + 1, d_.opposite[x + 1], static_cast<int>(k)});
      x = d_.opposite[x + 1];
    } while (x != start);
  }

  auto reserve = [&](int count, int z_stride, int z_period) {
    const int base = static_cast<int>(height_.size());
    for (int i = 0; i < count; ++i) {
      uf_.add();
      height_.push_back((i / z_stride) % z_period);
    }
    return base;
  };
  for (int c = 0; c < v; ++c) crossing_base_.push_back(reserve(216, 1, 6));
  for (std::size_t e = 0; e < bands_.size(); ++e) band_base_.push_back(reserve(6 * 6 * (kSegments + 1), kSegments + 1, 6));
}

void Builder::glue_bands() {
  for (int e = 0; e < static_cast<int>(bands_.size()); ++e) {
    const Band& b = bands_[e];
    for (int a = 0; a <= kSize; ++a)
      for (int z = 0; z <= kSize; ++z) {
        if (b.out_dart < 0) {
          uf_.unite(band_vertex(e, a, z, 0), band_vertex(e, a, z, kSegments));
          continue;
        }
        auto p = side_point(side_of_dart_[b.out_dart], a);
        uf_.unite(band_vertex(e, a, z, 0), crossing_vertex(b.out_dart / 4, p[0], p[1], z));
        auto q = side_point(side_of_dart_[b.in_dart], kSize - a);
        uf_.unite(band_vertex(e, a, z, kSegments), crossing_vertex(b.in_dart / 4, q[0], q[1], z));
      }
  }
}

void Builder::crossing_cells(int c) {
  std::set<std::array<int, 3>> removed;
  std::map<std::array<int, 3>, int> owner;
  for (auto box : over_tunnel()) owner[box] = passage_component_[4 * c + OverIn];
  for (auto box : under_tunnel()) owner[box] = passage_component_[4 * c + UnderIn];
  RawBlock block{BlockType::Crossing, c, {}};
  for (int x = 0; x < kSize; ++x)
    for (int y = 0; y < kSize; ++y)
      for (int z = 0; z < kSize; ++z) {
        auto corner = [&](int i, int j, int k) { return crossing_vertex(c, x + i, y + j, z + k); };
        auto faces = box_faces(corner);
        if (auto it = owner.find({x, y, z}); it != owner.end()) {
          for (int f : faces) torus_tag_[f] = it->second;
          continue;
        }
        block.cells.push_back(static_cast<int>(cells_.size()));
        cells_.push_back(std::move(faces));
      }
  blocks_.push_back(std::move(block));
}

void Builder::band_cells(int e) {
  RawBlock block{BlockType::Edge, e, {}};
  for (int a = 0; a < kSize; ++a)
    for (int z = 0; z < kSize; ++z)
      for (int s = 0; s < kSegments; ++s) {
        auto corner = [&](int i, int j, int k) { return band_vertex(e, a + i, z + j, s + k); };
        auto faces = box_faces(corner);
        if (a == kHole && z == kHole) {
          for (int f : faces) torus_tag_[f] = bands_[e].link_component;
          continue;
        }
        block.cells.push_back(static_cast<int>(cells_.size()));
        cells_.push_back(std::move(faces));
      }
  blocks_.push_back(std::move(block));
}

void Builder::face_cells(int f) {
  const Walk& walk = d_.faces[f].walks.front();
  const int darts = d_.dart_count();
  // (band, across side, along direction) for every dart of the walk
  struct Piece {
    int band, a;
    bool forward;
  };
  std::vector<Piece> pieces;
  for (int x : walk) {
    if (x >= darts) {
      const int j = (x - darts) / 2;
      int band = 0;
      for (int e = 0, seen = 0; e < static_cast<int>(bands_.size()); ++e)
        if (bands_[e].out_dart < 0 && seen++ == j) band = e;
      pieces.push_back({band, (x - darts) % 2 == 0 ? kSize : 0, (x - darts) % 2 == 0});
    } else if (x % 2 == 1) {  // out-dart: left side is across = 5
      pieces.push_back({band_of_out_dart_[x], kSize, true});
    } else {
      pieces.push_back({band_of_out_dart_[d_.opposite[x]], 0, false});
    }
  }
  auto ring = [&](int z) {
    std::vector<int> cyc;
    for (const auto& p : pieces)
      for (int i = 0; i <= kSegments; ++i) cyc.push_back(band_vertex(p.band, p.a, z, p.forward ? i : kSegments - i));
    return cyc;
  };
  std::vector<int> cell{face_id(ring(0)), face_id(ring(kSize))};
  for (const auto& p : pieces)
    for (int z = 0; z < kSize; ++z)
      for (int s = 0; s < kSegments; ++s)
        cell.push_back(face_id({band_vertex(p.band, p.a, z, s), band_vertex(p.band, p.a, z, s + 1),
                                band_vertex(p.band, p.a, z + 1, s + 1), band_vertex(p.band, p.a, z + 1, s)}));
  std::sort(cell.begin(), cell.end());
  blocks_.push_back(RawBlock{BlockType::Face, f, {static_cast<int>(cells_.size())}});
  cells_.push_back(std::move(cell));
}

std::vector<int> Builder::meridian(int k, const std::map<std::pair<int, int>, int>& edge_index) {
  // band entering the first Under passage, else the first band of the component
  int band = -1;
  for (int e = 0; e < static_cast<int>(bands_.size()); ++e) {
    if (bands_[e].link_component != k) continue;
    if (band < 0) band = e;
    if (bands_[e].in_dart >= 0 && bands_[e].out_dart >= 0 && bands_[e].in_dart % 4 == UnderIn) {
      band = e;
      break;
    }
  }
  std::vector<int> out;
  const int corners[4][2] = {{kHole, kHole}, {kHole + 1, kHole}, {kHole + 1, kHole + 1}, {kHole, kHole + 1}};
  for (int i = 0; i < 4; ++i) {
    int u = uf_.find(band_vertex(band, corners[i][0], corners[i][1], 1));
    int v = uf_.find(band_vertex(band, corners[(i + 1) % 4][0], corners[(i + 1) % 4][1], 1));
    out.push_back(edge_index.at({std::min(u, v), std::max(u, v)}));
  }
  return out;
}

std::pair<ComplementComplex, BoundaryPattern> Builder::run() {
  for (const auto& f : d_.faces)
    if (!f.is_disk()) throw SurfaceError("complement needs a cellular diagram");
  make_vertices();
  glue_bands();
  for (int f = 0; f < static_cast<int>(d_.faces.size()); ++f) face_cells(f);
  for (int e = 0; e < static_cast<int>(bands_.size()); ++e) band_cells(e);
  for (int c = 0; c < static_cast<int>(d_.crossings.size()); ++c) crossing_cells(c);

  ComplementComplex cx;
  cx.surface_genus = supporting_genus(d_);
  cx.link_components = static_cast<int>(d_.code.component_count());

  // Keep only 2-cells that bound some 3-cell; renumber everything in order of use.
  std::vector<int> face_new(face_cycles_.size(), -1), vertex_new(height_.size(), -1);
  std::map<std::pair<int, int>, int> edge_index;  // by root vertex pair
  std::map<std::pair<int, int>, int> edge_new;
  for (auto& cell : cells_) {
    for (int& f : cell) {
      if (face_new[f] < 0) {
        face_new[f] = static_cast<int>(cx.faces.size());
        std::vector<int> cyc;
        for (int v : face_cycles_[f]) {
          if (vertex_new[v] < 0) {
            vertex_new[v] = static_cast<int>(cx.vertex_height.size());
            cx.vertex_height.push_back(height_[v]);
          }
          cyc.push_back(vertex_new[v]);
        }
        for (std::size_t i = 0; i < cyc.size(); ++i) {
          int a = face_cycles_[f][i], b = face_cycles_[f][(i + 1) % cyc.size()];
          std::pair<int, int> key{std::min(a, b), std::max(a, b)};
          if (!edge_index.count(key)) {
            edge_index[key] = static_cast<int>(cx.edges.size());
            int u = vertex_new[a], v = vertex_new[b];
            cx.edges.push_back({std::min(u, v), std::max(u, v)});
          }
        }
        cx.faces.push_back(std::move(cyc));
      }
      f = face_new[f];
    }
    std::sort(cell.begin(), cell.end());
  }
  cx.cells = cells_;

  // blocks and their boundary faces
  std::vector<int> cell_block(cx.cells.size());
  std::stable_sort(blocks_.begin(), blocks_.end(), [](const RawBlock& a, const RawBlock& b) {
    return std::pair(a.type, a.origin) < std::pair(b.type, b.origin);
  });
  std::vector<int> uses(cx.faces.size(), 0);
  for (const auto& rb : blocks_) {
    Block b{rb.type, rb.origin, rb.cells, {}};
    std::map<int, int> count;
    for (int c : rb.cells) {
      cell_block[c] = static_cast<int>(cx.blocks.size());
      for (int f : cx.cells[c]) {
        ++count[f];
        ++uses[f];
      }
    }
    for (auto [f, n] : count)
      if (n == 1) b.faces.push_back(f);
    cx.blocks.push_back(std::move(b));
  }
  std::map<int, std::vector<int>> owners;  // 2-cell -> blocks having it as a block face
  for (int b = 0; b < static_cast<int>(cx.blocks.size()); ++b)
    for (int f : cx.blocks[b].faces) owners[f].push_back(b);
  for (const auto& [f, bs] : owners)
    if (bs.size() == 2) cx.gluings.push_back({BlockFace{bs[0], f}, BlockFace{bs[1], f}});
  std::sort(cx.gluings.begin(), cx.gluings.end());

  for (std::size_t old = 0; old < face_new.size(); ++old) {
    const int f = face_new[old];
    if (f < 0 || uses[f] != 1) continue;
    BoundaryLabel label;
    auto tag = torus_tag_.find(static_cast<int>(old));
    bool top = true, bottom = true;
    for (int v : cx.faces[f]) {
      top &= cx.vertex_height[v] == kSize;
      bottom &= cx.vertex_height[v] == 0;
    }
    if (tag != torus_tag_.end()) label = {BoundaryLabel::Kind::Torus, tag->second};
    else if (top) label = {BoundaryLabel::Kind::Top, -1};
    else if (bottom) label = {BoundaryLabel::Kind::Bottom, -1};
    else throw ComplexError("unlabeled boundary cell");
    cx.boundary[f] = label;
  }

  BoundaryPattern pattern;
  for (int k = 0; k < cx.link_components; ++k) pattern.meridians.push_back(meridian(k, edge_index));
  return {std::move(cx), std::move(pattern)};
}

}  // namespace

std::pair<ComplementComplex, BoundaryPattern> build_complement(const SurfaceDiagram& d) { return Builder(d).run(); }

std::vector<BoundaryComponent> boundary_components(const ComplementComplex& c) {
  std::vector<int> faces;
  for (const auto& [f, label] : c.boundary) faces.push_back(f);
  UnionFind uf;
  std::map<int, int> local;
  for (int f : faces) local[f] = uf.add();
  std::map<std::pair<int, int>, int> first_face_on_edge;
  for (int f : faces) {
    const auto& cyc = c.faces[f];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      std::pair<int, int> e{std::min(cyc[i], cyc[(i + 1) % cyc.size()]), std::max(cyc[i], cyc[(i + 1) % cyc.size()])};
      auto [it, inserted] = first_face_on_edge.emplace(e, f);
      if (!inserted) uf.unite(local[f], local[it->second]);
    }
  }
  std::map<int, int> comp_of_root;
  std::vector<BoundaryComponent> out;
  for (int f : faces) {
    int r = uf.find(local[f]);
    auto [it, inserted] = comp_of_root.emplace(r, static_cast<int>(out.size()));
    if (inserted) out.push_back(BoundaryComponent{c.boundary.at(f), {}, 0});
    out[it->second].faces.push_back(f);
  }
  for (auto& comp : out) {
    std::set<int> vs;
    std::set<std::pair<int, int>> es;
    for (int f : comp.faces) {
      const auto& cyc = c.faces[f];
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        vs.insert(cyc[i]);
        es.insert({std::min(cyc[i], cyc[(i + 1) % cyc.size()]), std::max(cyc[i], cyc[(i + 1) % cyc.size()])});
      }
    }
    comp.euler = static_cast<long>(vs.size()) - static_cast<long>(es.size()) + static_cast<long>(comp.faces.size());
  }
  return out;
}

ComplexReport check_complex(const ComplementComplex& c, const BoundaryPattern& p) {
  ComplexReport r;
  auto problem = [&](std::string s) { r.problems.push_back(std::move(s)); };

  std::vector<int> uses(c.faces.size(), 0);
  for (const auto& cell : c.cells)
    for (int f : cell) {
      if (f < 0 || f >= static_cast<int>(c.faces.size())) {
        problem("3-cell refers to a missing 2-cell");
        return r;
      }
      ++uses[f];
    }
  for (std::size_t f = 0; f < uses.size(); ++f)
    if (uses[f] < 1 || uses[f] > 2) problem("2-cell " + std::to_string(f) + " lies on " + std::to_string(uses[f]) + " 3-cells");

  // gluing involution: every block face is glued exactly once or is boundary
  std::map<BlockFace, BlockFace> partner;
  for (const auto& [x, y] : c.gluings) {
    if (x.face != y.face || x.block == y.block) problem("gluing pairs unrelated block faces");
    if (!partner.emplace(x, y).second || !partner.emplace(y, x).second)
      problem("block face " + std::to_string(x.block) + ":" + std::to_string(x.face) + " is glued twice");
  }
  for (int b = 0; b < static_cast<int>(c.blocks.size()); ++b)
    for (int f : c.blocks[b].faces) {
      const bool glued = partner.count(BlockFace{b, f}) > 0;
      const bool boundary = c.boundary.count(f) > 0;
      if (glued == boundary)
        problem("block face " + std::to_string(b) + ":" + std::to_string(f) +
                (glued ? " is both glued and boundary" : " is unpaired: gluing involution broken"));
    }
  for (const auto& [x, y] : partner)
    if (partner.at(y) != x) problem("gluing is not an involution");

  long expected = 0;
  for (int g : c.surface_genus) expected += 2 - 2 * g;
  if (c.euler_characteristic() != expected)
    problem("Euler characteristic " + std::to_string(c.euler_characteristic()) + ", expected " + std::to_string(expected));

  for (const auto& [f, label] : c.boundary)
    if (f < 0 || f >= static_cast<int>(uses.size()) || uses[f] != 1) problem("labeled cell is not on the boundary");
  for (std::size_t f = 0; f < uses.size(); ++f)
    if (uses[f] == 1 && !c.boundary.count(static_cast<int>(f))) problem("boundary 2-cell " + std::to_string(f) + " has no label");

  // boundary census
  auto comps = boundary_components(c);
  std::vector<long> top, bottom, want;
  std::vector<int> tori(c.link_components, 0);
  for (int g : c.surface_genus) want.push_back(2 - 2 * g);
  for (const auto& comp : comps) {
    for (int f : comp.faces)
      if (!(c.boundary.at(f) == comp.label)) problem("boundary component mixes labels");
    switch (comp.label.kind) {
      case BoundaryLabel::Kind::Top: top.push_back(comp.euler); break;
      case BoundaryLabel::Kind::Bottom: bottom.push_back(comp.euler); break;
      case BoundaryLabel::Kind::Torus:
        if (comp.label.component < 0 || comp.label.component >= c.link_components) {
          problem("torus label out of range");
          break;
        }
        ++tori[comp.label.component];
        if (comp.euler != 0) problem("torus " + std::to_string(comp.label.component) + " has Euler characteristic " + std::to_string(comp.euler));
        break;
    }
  }
  std::sort(top.begin(), top.end());
  std::sort(bottom.begin(), bottom.end());
  std::sort(want.begin(), want.end());
  if (top != want) problem("top boundary does not match the surface");
  if (bottom != want) problem("bottom boundary does not match the surface");
  for (int k = 0; k < c.link_components; ++k)
    if (tori[k] != 1) problem("link component " + std::to_string(k) + " has " + std::to_string(tori[k]) + " boundary tori");

  // pattern closure
  if (static_cast<int>(p.meridians.size()) != c.link_components) problem("pattern needs one meridian per link component");
  std::map<int, std::set<int>> torus_edges;  // component -> edges on its torus
  for (const auto& [f, label] : c.boundary) {
    if (label.kind != BoundaryLabel::Kind::Torus) continue;
    const auto& cyc = c.faces[f];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      std::array<int, 2> e{std::min(cyc[i], cyc[(i + 1) % cyc.size()]), std::max(cyc[i], cyc[(i + 1) % cyc.size()])};
      torus_edges[label.component].insert(e[0] * static_cast<int>(c.vertex_height.size()) + e[1]);
    }
  }
  for (std::size_t k = 0; k < p.meridians.size(); ++k) {
    const auto& m = p.meridians[k];
    std::map<int, int> degree;
    bool valid = !m.empty();
    for (int e : m) {
      if (e < 0 || e >= static_cast<int>(c.edges.size())) {
        valid = false;
        break;
      }
      const auto& ed = c.edges[e];
      ++degree[ed[0]];
      ++degree[ed[1]];
      if (!torus_edges[static_cast<int>(k)].count(ed[0] * static_cast<int>(c.vertex_height.size()) + ed[1]))
        problem("meridian " + std::to_string(k) + " leaves its torus");
    }
    for (auto [v, n] : degree) valid &= n == 2;
    if (valid) {
      // connected single cycle
      std::set<int> seen{c.edges[m[0]][0]};
      bool grew = true;
      while (grew) {
        grew = false;
        for (int e : m) {
          auto [u, v] = std::pair(c.edges[e][0], c.edges[e][1]);
          if (seen.count(u) != seen.count(v)) {
            seen.insert(u);
            seen.insert(v);
            grew = true;
          }
        }
      }
      valid = seen.size() == degree.size();
    }
    if (!valid) problem("meridian " + std::to_string(k) + " is not a closed cycle");
  }
  return r;
}

DiagramCensus census_of(const SurfaceDiagram& d) {
  DiagramCensus c;
  c.crossings = static_cast<int>(d.crossings.size());
  c.edges = static_cast<int>(d.code.symbol_count() + d.free_loops.size());
  c.faces = static_cast<int>(d.faces.size());
  c.link_components = static_cast<int>(d.code.component_count());
  c.genus = supporting_genus(d);
  std::sort(c.genus.begin(), c.genus.end());
  return c;
}

DiagramCensus reconstruct_census(const ComplementComplex& c, const BoundaryPattern& p) {
  DiagramCensus out;
  for (const auto& b : c.blocks) {
    switch (b.type) {
      case BlockType::Face: ++out.faces; break;
      case BlockType::Edge: ++out.edges; break;
      case BlockType::Crossing: ++out.crossings; break;
    }
  }
  out.link_components = static_cast<int>(p.meridians.size());
  for (const auto& comp : boundary_components(c))
    if (comp.label.kind == BoundaryLabel::Kind::Top) out.genus.push_back(static_cast<int>((2 - comp.euler) / 2));
  std::sort(out.genus.begin(), out.genus.end());
  return out;
}

namespace {

using nlohmann::json;

json label_list(const ComplementComplex& c, BoundaryLabel::Kind kind) {
  json out = json::array();
  for (const auto& [f, label] : c.boundary)
    if (label.kind == kind) out.push_back(f);
  return out;
}

BlockType block_type_from(const std::string& s) {
  if (s == "face") return BlockType::Face;
  if (s == "edge") return BlockType::Edge;
  if (s == "crossing") return BlockType::Crossing;
  throw ComplexError("unknown block type " + s);
}

}  // namespace

std::string export_complex(const ComplementComplex& c, const BoundaryPattern& p) {
  auto report = check_complex(c, p);
  if (!report.ok()) throw ComplexError("complex fails validation: " + report.problems.front());
  json doc;
  doc["blocks"] = json::array();
  for (std::size_t i = 0; i < c.blocks.size(); ++i) {
    const auto& b = c.blocks[i];
    doc["blocks"].push_back(
        {{"id", i}, {"type", to_string(b.type)}, {"origin", b.origin}, {"faces", b.faces}, {"cells", b.cells}});
  }
  doc["gluings"] = json::array();
  for (const auto& [x, y] : c.gluings) doc["gluings"].push_back({{x.block, x.face}, {y.block, y.face}});
  json tori = json::object();
  for (int k = 0; k < c.link_components; ++k) tori[std::to_string(k)] = json::array();
  for (const auto& [f, label] : c.boundary)
    if (label.kind == BoundaryLabel::Kind::Torus) tori[std::to_string(label.component)].push_back(f);
  doc["boundary"] = {{"top", label_list(c, BoundaryLabel::Kind::Top)},
                     {"bottom", label_list(c, BoundaryLabel::Kind::Bottom)},
                     {"tori", tori}};
  json pattern = json::object();
  for (std::size_t k = 0; k < p.meridians.size(); ++k) pattern[std::to_string(k)] = p.meridians[k];
  doc["pattern"] = pattern;
  doc["cells"] = {{"vertex_heights", c.vertex_height},
                  {"edges", c.edges},
                  {"faces", c.faces},
                  {"cells", c.cells}};
  doc["surface"] = {{"genus", c.surface_genus}, {"link_components", c.link_components}};
  return doc.dump();
}

std::pair<ComplementComplex, BoundaryPattern> import_complex(const std::string& text) {
  try {
    json doc = json::parse(text);
    ComplementComplex c;
    BoundaryPattern p;
    const auto& cells = doc.at("cells");
    c.vertex_height = cells.at("vertex_heights").get<std::vector<int>>();
    c.edges = cells.at("edges").get<std::vector<std::array<int, 2>>>();
    c.faces = cells.at("faces").get<std::vector<std::vector<int>>>();
    c.cells = cells.at("cells").get<std::vector<std::vector<int>>>();
    for (const auto& b : doc.at("blocks"))
      c.blocks.push_back(Block{block_type_from(b.at("type").get<std::string>()), b.at("origin").get<int>(),
                               b.at("cells").get<std::vector<int>>(), b.at("faces").get<std::vector<int>>()});
    for (const auto& g : doc.at("gluings"))
      c.gluings.push_back({BlockFace{g.at(0).at(0).get<int>(), g.at(0).at(1).get<int>()},
                           BlockFace{g.at(1).at(0).get<int>(), g.at(1).at(1).get<int>()}});
    const auto& boundary = doc.at("boundary");
    for (int f : boundary.at("top").get<std::vector<int>>()) c.boundary[f] = {BoundaryLabel::Kind::Top, -1};
    for (int f : boundary.at("bottom").get<std::vector<int>>()) c.boundary[f] = {BoundaryLabel::Kind::Bottom, -1};
    for (const auto& [k, list] : boundary.at("tori").items())
      for (int f : list.get<std::vector<int>>()) c.boundary[f] = {BoundaryLabel::Kind::Torus, std::stoi(k)};
    c.surface_genus = doc.at("surface").at("genus").get<std::vector<int>>();
    c.link_components = doc.at("surface").at("link_components").get<int>();
    p.meridians.resize(c.link_components);
    for (const auto& [k, list] : doc.at("pattern").items()) {
      const int index = std::stoi(k);
      if (index < 0 || index >= c.link_components) throw ComplexError("pattern refers to a missing component");
      p.meridians[index] = list.get<std::vector<int>>();
    }
    return {std::move(c), std::move(p)};
  } catch (const json::exception& e) {
    throw ComplexError(std::string("malformed complex document: ") + e.what());
  }
}

}  // namespace vlink
