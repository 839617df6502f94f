#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "vlink/codes.hpp"

namespace vlink {

/// Darts are numbered 4*crossing + role. Free loop j contributes two
/// pseudo-darts (its two sides), numbered after all crossing darts.
enum DartRole : int { OverIn = 0, OverOut = 1, UnderIn = 2, UnderOut = 3 };

struct CrossingInfo {
  std::uint32_t label = 0;
  int sign = 1;
  friend bool operator==(const CrossingInfo&, const CrossingInfo&) = default;
};

/// A walk is a cyclic sequence of darts; dart d stands for the side of its
/// edge lying on the left when leaving the crossing through d.
using Walk = std::vector<int>;

struct Face {
  std::vector<Walk> walks;
  int genus = 0;
  int component = 0;

  int boundary_count() const noexcept { return static_cast<int>(walks.size()); }
  int euler() const noexcept { return 2 - 2 * genus - boundary_count(); }
  bool is_disk() const noexcept { return genus == 0 && walks.size() == 1; }
  friend bool operator==(const Face&, const Face&) = default;
};

struct SurfaceComponent {
  int genus = 0;
  std::vector<int> link_components;  // ascending
  friend bool operator==(const SurfaceComponent&, const SurfaceComponent&) = default;
};

/// A link diagram on a closed oriented (possibly disconnected) surface. The
/// graph part (crossings, rotation, edges) is fixed by the Gauss code; faces
/// carry their own genus and boundary walks so that handles can be added and
/// removed by Euler-characteristic bookkeeping.
struct SurfaceDiagram {
  GaussCode code;
  std::vector<CrossingInfo> crossings;  // ordered by label
  std::vector<int> rotation_next;       // counterclockwise successor of each dart
  std::vector<int> opposite;            // dart at the other end of the edge
  std::vector<int> component_start;     // in-dart of the first passage, -1 for a free loop
  std::vector<int> free_loops;          // link component carried by each free loop
  std::vector<Face> faces;
  std::vector<SurfaceComponent> surface_components;
  std::vector<int> link_assignment;  // link component -> surface component

  int dart_count() const noexcept { return static_cast<int>(4 * crossings.size()); }
  int side_count() const noexcept { return dart_count() + 2 * static_cast<int>(free_loops.size()); }
  int rotation_prev(int dart) const;
  /// Face permutation: next dart along the boundary walk.
  int walk_next(int dart) const { return rotation_prev(opposite[dart]); }
  std::vector<int> crossing_components() const;

  friend bool operator==(const SurfaceDiagram&, const SurfaceDiagram&) = default;
};

class SurfaceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class StabilizeKind { AddHandle, SplitWalkPair };

/// Least-genus cellular embedding of the diagram (Carter surface).
SurfaceDiagram carter_embed(const GaussCode& code);

/// Reads the Gauss code back off the rotation system and edge pairing.
GaussCode read_gauss(const SurfaceDiagram& d);

std::vector<int> supporting_genus(const SurfaceDiagram& d);

/// Sum of supporting genera of the Carter surface; cheap path used by search.
int carter_genus(const GaussCode& code);

/// Checks the Euler law per component, walk closure, dart coverage and the
/// nonempty-component rule. Empty result means well formed.
std::vector<std::string> check_diagram(const SurfaceDiagram& d, bool require_nonempty = true);

/// AddHandle raises the genus of `face`. SplitWalkPair tubes `face` to
/// `other_face`, merging them (and their surface components when distinct).
SurfaceDiagram stabilize(const SurfaceDiagram& d, int face, StabilizeKind kind, int other_face = -1);

/// Compresses every face to a disk (genus first, then multi-walk faces in
/// face order) and drops empty components.
SurfaceDiagram destabilize_fully(const SurfaceDiagram& d);

SurfaceDiagram drop_empty_components(const SurfaceDiagram& d);

/// Disjoint union with a closed surface of the given genus carrying no link.
SurfaceDiagram with_bare_component(const SurfaceDiagram& d, int genus);

/// Isomorphism invariant: encoding of the labeled rotation system after
/// relabeling crossings in order of first appearance.
std::string signature(const SurfaceDiagram& d);
bool isomorphic(const SurfaceDiagram& a, const SurfaceDiagram& b);

/// Stable human-readable dump for golden tests.
std::string dump(const SurfaceDiagram& d);

}  // namespace vlink
