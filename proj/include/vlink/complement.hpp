#pragma once

#include <array>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vlink/surface.hpp"

namespace vlink {

// Cell complex of (M x I) minus an open tubular neighborhood of the link.
//
// Every block lives in its own integer grid with height z in 0..5 (z = 0 is
// the bottom copy of M, z = 5 the top copy):
//   crossing  the cube [0,5]^3 minus two bent unit tunnels, the over strand
//             running west to east above the under strand running south to
//             north; sides are numbered east, north, west, south in the
//             counterclockwise order of the crossing's darts
//   edge      a band [0,5] across x [0,5] high x [0,3] along with the unit
//             tunnel at across 2, height 2
//   face      one polygon prism over a disk face, walled by the band sides
// Grid vertices on shared walls are identified; edges and 2-cells are the
// distinct vertex sets that result.

enum class BlockType { Face, Edge, Crossing };
std::string to_string(BlockType t);

struct Block {
  BlockType type = BlockType::Face;
  int origin = 0;          // face, edge or crossing index in the diagram
  std::vector<int> cells;  // 3-cells
  std::vector<int> faces;  // 2-cells on the block's boundary, ascending
  friend bool operator==(const Block&, const Block&) = default;
};

struct BlockFace {
  int block = 0;
  int face = 0;
  friend auto operator<=>(const BlockFace&, const BlockFace&) = default;
};

struct BoundaryLabel {
  enum class Kind { Top, Bottom, Torus };
  Kind kind = Kind::Top;
  int component = -1;  // link component for Torus
  friend bool operator==(const BoundaryLabel&, const BoundaryLabel&) = default;
};

struct ComplementComplex {
  std::vector<int> vertex_height;
  std::vector<std::array<int, 2>> edges;  // vertex pairs, ascending
  std::vector<std::vector<int>> faces;    // 2-cells as vertex cycles
  std::vector<std::vector<int>> cells;    // 3-cells as 2-cell lists
  std::vector<Block> blocks;              // sorted by (type, origin)
  std::vector<std::pair<BlockFace, BlockFace>> gluings;
  std::map<int, BoundaryLabel> boundary;  // boundary 2-cell -> label

  // Source data the complex is checked against.
  std::vector<int> surface_genus;
  int link_components = 0;

  int vertex_count() const noexcept { return static_cast<int>(vertex_height.size()); }
  long euler_characteristic() const noexcept;
  friend bool operator==(const ComplementComplex&, const ComplementComplex&) = default;
};

/// One closed edge cycle per link component, on that component's torus.
struct BoundaryPattern {
  std::vector<std::vector<int>> meridians;
  friend bool operator==(const BoundaryPattern&, const BoundaryPattern&) = default;
};

/// Throws SurfaceError if some face of `d` is not a disk.
std::pair<ComplementComplex, BoundaryPattern> build_complement(const SurfaceDiagram& d);

struct ComplexReport {
  std::vector<std::string> problems;
  bool ok() const noexcept { return problems.empty(); }
};

/// Gluing involution, Euler characteristic, boundary census, pattern closure.
ComplexReport check_complex(const ComplementComplex& c, const BoundaryPattern& p);

struct BoundaryComponent {
  BoundaryLabel label;
  std::vector<int> faces;
  long euler = 0;
};

/// Connected components of the boundary surface (2-cells joined along edges).
std::vector<BoundaryComponent> boundary_components(const ComplementComplex& c);

/// Diagram census read back from a complex and its pattern.
struct DiagramCensus {
  int crossings = 0;
  int edges = 0;  // including one per crossing-free component
  int faces = 0;
  int link_components = 0;
  std::vector<int> genus;  // per surface component, ascending
  friend bool operator==(const DiagramCensus&, const DiagramCensus&) = default;
};
DiagramCensus census_of(const SurfaceDiagram& d);
DiagramCensus reconstruct_census(const ComplementComplex& c, const BoundaryPattern& p);

class ComplexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deterministic JSON text. Throws ComplexError if check_complex fails.
std::string export_complex(const ComplementComplex& c, const BoundaryPattern& p);
/// Inverse of export_complex; throws ComplexError on malformed input.
std::pair<ComplementComplex, BoundaryPattern> import_complex(const std::string& json_text);

}  // namespace vlink
