#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vlink/codes.hpp"

namespace vlink {

/// Integer Laurent polynomial in A. Zero coefficients are never stored, so
/// equality is map equality.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;
  static LaurentPoly monomial(int exponent, Coeff coeff = 1);

  const std::map<int, Coeff>& terms() const noexcept { return terms_; }
  Coeff coeff(int exponent) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  int min_exponent() const;
  int max_exponent() const;
  int span() const { return is_zero() ? 0 : max_exponent() - min_exponent(); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& add_term(int exponent, Coeff c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly pow(unsigned n) const;

  /// e.g. "-A^3 + A^-1"; "0" for the zero polynomial.
  std::string to_string() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  friend auto operator<=>(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ <=> b.terms_; }

 private:
  std::map<int, Coeff> terms_;
};

/// Loop value -A^2 - A^-2.
LaurentPoly loop_value();

/// Kauffman bracket with <unknot> = 1, by explicit sum over all 2^n states.
/// `threads` > 1 splits the state range; the result is identical.
LaurentPoly kauffman_bracket(const GaussCode& code, unsigned threads = 1);

/// Same bracket by recursive skein expansion with loop contraction; an
/// independent evaluator kept for cross-checking.
LaurentPoly kauffman_bracket_skein(const GaussCode& code);

/// (-A^3)^(-writhe) * <code>.
LaurentPoly f_polynomial(const GaussCode& code, unsigned threads = 1);

class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sum of signs of odd crossings; knots only.
int odd_writhe(const GaussCode& code);

struct LinkingEntry {
  int over_sum = 0;   // crossings where component i passes over component j
  int under_sum = 0;  // crossings where component i passes under component j
  friend bool operator==(const LinkingEntry&, const LinkingEntry&) = default;
  friend auto operator<=>(const LinkingEntry&, const LinkingEntry&) = default;
};
using LinkingMatrix = std::vector<std::vector<LinkingEntry>>;

LinkingMatrix linking_matrix(const GaussCode& code);

/// Arcs run between consecutive Under passages of a component; each Under
/// passage ends one arc and starts the next.
struct ArcStructure {
  int arc_count = 0;
  struct Relation {
    int over_arc, in_arc, out_arc;
  };
  std::vector<Relation> relations;  // one per crossing
};
ArcStructure arc_structure(const GaussCode& code);

/// Number of Fox p-colorings for p in {3, 5, 7}. Up to 10 arcs by exhaustive
/// search, otherwise p^(arcs - rank) from the relation matrix mod p.
std::uint64_t coloring_count(const GaussCode& code, int p);
std::uint64_t coloring_count_exhaustive(const GaussCode& code, int p);
std::uint64_t coloring_count_rank(const GaussCode& code, int p);

struct Fingerprint {
  int component_count = 0;
  LaurentPoly f_poly;
  std::optional<int> odd_writhe;  // knots only
  LinkingMatrix linking;
  std::map<int, std::uint64_t> colorings;  // p -> count

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const GaussCode& code, unsigned threads = 1);

/// "[[[over,under],...],...]", row i = component i.
std::string to_string(const LinkingMatrix& m);

/// Invariant names usable as distinctness witnesses, cheapest first:
/// component_count, odd_writhe, linking_matrix, coloring_count(3|5|7),
/// f_polynomial.
const std::vector<std::string>& witness_invariants();

/// Text value of a witness invariant; nullopt where it is undefined
/// (odd_writhe of a link). Throws InvariantError for an unknown name.
std::optional<std::string> invariant_value(const GaussCode& code, const std::string& name, unsigned threads = 1);

struct InvariantDifference {
  std::string invariant;
  std::string value_a, value_b;
};

/// First witness invariant on which the two codes differ.
std::optional<InvariantDifference> first_difference(const GaussCode& a, const GaussCode& b, unsigned threads = 1);

}  // namespace vlink
