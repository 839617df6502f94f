#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vlink/budget.hpp"
#include "vlink/codes.hpp"
#include "vlink/moves.hpp"
#include "vlink/surface.hpp"
#include "vlink/verdict.hpp"

namespace vlink {

enum class Classification { Classical, NonClassical, Unknown };
std::string to_string(Classification c);

/// A named invariant value that no classical link can have.
struct Obstruction {
  std::string invariant;
  std::string value;
};

struct ClassicalResult {
  Classification classification = Classification::Unknown;
  MoveTrace trace;  // Classical: replays to a genus-0 code
  std::optional<Obstruction> obstruction;
  std::size_t visited = 0;
};

struct ClassifyOptions {
  bool obstructions = true;
};

struct Part {
  GaussCode code;
  std::vector<std::size_t> components;  // indices into the decomposed link
  ClassicalResult classical;
};

struct SplitDecomposition {
  std::vector<Part> parts;
};

/// Link components carried by each surface component, in surface component
/// order.
std::vector<std::vector<std::size_t>> split_groups(const SurfaceDiagram& d);

/// One Carter diagram per surface component of a cellular diagram. Throws
/// SurfaceError if some face is not a disk.
std::vector<SurfaceDiagram> split_components(const SurfaceDiagram& d);

/// Obstructions to classicality: nonzero odd writhe (knots), asymmetric
/// linking matrix, f-polynomial exponents off 2(c-1) mod 4.
std::optional<Obstruction> classical_obstruction(const GaussCode& code, unsigned threads = 1);

/// Classical when some move-equivalent code found within budget has Carter
/// genus 0, NonClassical when an obstruction fires, Unknown otherwise.
ClassicalResult classify_classical(const GaussCode& code, const Budget& budget, const ClassifyOptions& options = {});

/// Splits and classifies without searching: a part is Classical only if its
/// own diagram already has genus 0.
SplitDecomposition decompose(const GaussCode& code, unsigned threads = 1);

/// Invariant separation, then bidirectional search.
Verdict compare_classical(const GaussCode& a, const GaussCode& b, const Budget& budget);

}  // namespace vlink
