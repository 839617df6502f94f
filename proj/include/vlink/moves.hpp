#pragma once

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vlink/budget.hpp"
#include "vlink/codes.hpp"

namespace vlink {

enum class MoveKind { R1Add, R1Remove, R2Add, R2Remove, R3 };

std::string to_string(MoveKind kind);
MoveKind move_kind_from_string(const std::string& s);

/// Position in a code: component index and symbol offset. For insertions the
/// offset names the gap before that symbol; the gap after the last symbol is
/// the same cyclic gap as offset 0. For pairs it names the first symbol of
/// two cyclically adjacent ones.
struct Site {
  int component = 0;
  int offset = 0;
  friend auto operator<=>(const Site&, const Site&) = default;
};

/// A Reidemeister move at a fixed site.
///   R1Add     sites[0] = gap; sign, over_first
///   R1Remove  sites[0] = adjacent pair with one label
///   R2Add     sites[0] = gap for the Over pair, sites[1] = gap for the Under
///             pair; sign of the first new crossing (the second gets -sign),
///             reversed (Under pair in opposite order), under_first (only
///             when both gaps coincide)
///   R2Remove  sites[0] = Over pair, sites[1] = Under pair
///   R3        sites = the three strand pairs, ascending
struct MoveSpec {
  MoveKind kind = MoveKind::R1Add;
  std::vector<Site> sites;
  int sign = 1;
  bool over_first = true;
  bool reversed = false;
  bool under_first = false;

  friend auto operator<=>(const MoveSpec&, const MoveSpec&) = default;
};

std::string describe(const MoveSpec& m);

class InapplicableMove : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GaussCode apply_move(const GaussCode& code, const MoveSpec& m);

/// The move undoing `m` on `before`: apply_move(apply_move(before, m), inverse)
/// has the same normal form as `before`.
MoveSpec inverse_move(const GaussCode& before, const MoveSpec& m);

/// All applicable moves (additions capped by budget.max_crossings) with their
/// results, in a fixed order: R1Remove, R2Remove, R3, R1Add, R2Add, each by
/// site and parameters.
std::vector<std::pair<MoveSpec, GaussCode>> enumerate_moves(const GaussCode& code, const Budget& caps);

/// Only the move specs, same order as enumerate_moves.
std::vector<MoveSpec> enumerate_move_specs(const GaussCode& code, const Budget& caps);

/// Local data of an R3 triangle, strands named by height. top_first: the top
/// strand meets TM before TB; middle_first: middle meets TM before MB;
/// bottom_first: bottom meets TB before MB.
struct TriangleShape {
  bool top_first = false, middle_first = false, bottom_first = false;
  int sign_tm = 1, sign_tb = 1, sign_mb = 1;
  friend bool operator==(const TriangleShape&, const TriangleShape&) = default;
};

/// The sixteen triangle shapes realizable by three oriented lines in the plane.
const std::array<TriangleShape, 16>& admissible_triangles();
bool is_admissible(const TriangleShape& t);

struct MoveTrace {
  GaussCode start;
  std::vector<MoveSpec> steps;
};

struct TraceCheck {
  bool ok = false;
  int failed_step = -1;  // -1 when ok or when only the endpoint differs
  std::string message;
  explicit operator bool() const noexcept { return ok; }
};

/// Replays the trace; throws InapplicableMove on a corrupt step.
GaussCode replay(const MoveTrace& t);

/// True iff replaying `t` from its start succeeds and ends at `expected_end`
/// up to normal form.
TraceCheck verify_trace(const MoveTrace& t, const GaussCode& expected_end);

}  // namespace vlink
