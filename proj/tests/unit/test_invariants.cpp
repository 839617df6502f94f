#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "vlink/invariants.hpp"

using namespace vlink;
using namespace vlink::testing;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<int, LaurentPoly::Coeff>> terms) {
  LaurentPoly p;
  for (auto [e, c] : terms) p.add_term(e, c);
  return p;
}

}  // namespace

TEST_CASE("LaurentPoly arithmetic") {
  auto d = loop_value();
  CHECK(d == poly({{2, -1}, {-2, -1}}));
  CHECK(d * d == poly({{4, 1}, {0, 2}, {-4, 1}}));
  CHECK((d + poly({{2, 1}})) == poly({{-2, -1}}));
  CHECK(LaurentPoly::monomial(3, -1).pow(2) == LaurentPoly::monomial(6, 1));
  CHECK(poly({{3, -1}, {-1, 1}}).to_string() == "-A^3 + A^-1");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(poly({{0, 1}}).to_string() == "1");
  CHECK(poly({{1, 2}}).to_string() == "2*A");
}

TEST_CASE("kauffman_bracket: small cases") {
  CHECK(kauffman_bracket(code(kUnknot)) == poly({{0, 1}}));
  CHECK(kauffman_bracket(code(kKink)) == poly({{3, -1}}));
  CHECK(kauffman_bracket(code("O1-U1-")) == poly({{-3, -1}}));
  CHECK(kauffman_bracket(code("0/0")) == loop_value());
}

TEST_CASE("kauffman_bracket: trefoil golden value") {
  auto b = kauffman_bracket(code(kTrefoil));
  CHECK(b == kauffman_bracket_skein(code(kTrefoil)));
  CHECK(b.terms().size() == 3);
  CHECK(b.span() == 12);
  CHECK(b == poly({{-7, 1}, {-3, -1}, {5, -1}}));
  CHECK(kauffman_bracket(code(kMirrorTrefoil)) == poly({{7, 1}, {3, -1}, {-5, -1}}));
}

TEST_CASE("f_polynomial") {
  CHECK(f_polynomial(code(kUnknot)) == poly({{0, 1}}));
  CHECK(f_polynomial(code(kKink)) == poly({{0, 1}}));
  CHECK(f_polynomial(code(kTrefoil)) == poly({{-16, -1}, {-12, 1}, {-4, 1}}));
  auto vt = f_polynomial(code(kVirtualTrefoil));
  CHECK(vt != poly({{0, 1}}));
  CHECK(vt == poly({{-10, -1}, {-6, 1}, {-4, 1}}));
  CHECK(f_polynomial(code(kHopf)) != f_polynomial(code(kVirtualHopf)));
}

TEST_CASE("state sum agrees with skein recursion") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 300; ++t) {
    auto c = random_small_code(rng, 8);
    CAPTURE(serialize_gauss(c));
    CHECK(kauffman_bracket(c) == kauffman_bracket_skein(c));
  }
}

TEST_CASE("threaded state sum is identical") {
  auto c = code("O1+U2-O3+U4-O5+U6-O7+U8-O9+U10-O2-U1+O4-U3+O6-U5+O8-U7+O10-U9+");
  CHECK(kauffman_bracket(c, 4) == kauffman_bracket(c, 1));
}

TEST_CASE("odd_writhe") {
  CHECK(odd_writhe(code(kUnknot)) == 0);
  CHECK(odd_writhe(code(kVirtualTrefoil)) == 2);
  CHECK(odd_writhe(code(kTrefoil)) == 0);
  CHECK_THROWS_AS(odd_writhe(code(kHopf)), InvariantError);
  std::mt19937_64 rng(19);
  for (int t = 0; t < 300; ++t) {
    auto c = random_code(rng, static_cast<int>(rng() % 8), 1);
    CHECK(odd_writhe(c) == parity_odd_writhe(c.component(0)));
  }
}

TEST_CASE("linking_matrix") {
  auto zero = linking_matrix(code("0/0"));
  REQUIRE(zero.size() == 2);
  for (auto& row : zero)
    for (auto& e : row) CHECK(e == LinkingEntry{});

  auto vh = linking_matrix(code(kVirtualHopf));
  CHECK(vh[0][1].over_sum == 1);
  CHECK(vh[1][0].over_sum == 0);
  CHECK(vh[0][1].under_sum == 0);
  CHECK(vh[1][0].under_sum == 1);

  auto h = linking_matrix(code(kHopf));
  CHECK(h[0][1].over_sum == 1);
  CHECK(h[1][0].over_sum == 1);

  std::mt19937_64 rng(23);
  for (int t = 0; t < 300; ++t) {
    auto c = random_code(rng, static_cast<int>(rng() % 8), 1 + static_cast<int>(rng() % 3));
    auto m = linking_matrix(c);
    auto oracle = tally_over(c);
    int total = 0, inter = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) {
        CHECK(m[i][j].over_sum == oracle[i][j]);
        CHECK(m[i][j].under_sum == oracle[j][i]);
        total += m[i][j].over_sum;
      }
    // conservation: every inter-component crossing is counted once as an over
    for (std::size_t i = 0; i < c.component_count(); ++i)
      for (const auto& s : c.component(i))
        if (s.passage == Passage::Over) {
          bool same = false;
          for (const auto& u : c.component(i)) same |= u.label == s.label && u.passage == Passage::Under;
          if (!same) inter += s.sign;
        }
    CHECK(total == inter);
  }
}

TEST_CASE("coloring_count") {
  CHECK(coloring_count(code(kUnknot), 3) == 3);
  CHECK(coloring_count(code(kTrefoil), 3) == 9);
  CHECK(coloring_count(code(kVirtualTrefoil), 3) == 3);
  CHECK(brute_force_colorings(code(kTrefoil), 3) == 9);
  CHECK(brute_force_colorings(code(kVirtualTrefoil), 3) == 3);
  CHECK(coloring_count(code(kFigureEight), 5) == 25);
  CHECK(coloring_count(code("0/0"), 3) == 9);
  CHECK_THROWS_AS(coloring_count(code(kUnknot), 4), InvariantError);
}

TEST_CASE("property: colorings agree across three counters and are powers of p") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 300; ++t) {
    auto c = random_small_code(rng, 6);
    CAPTURE(serialize_gauss(c));
    for (int p : {3, 5, 7}) {
      auto n = coloring_count(c, p);
      CHECK(n == coloring_count_rank(c, p));
      if (arc_structure(c).arc_count <= 6) CHECK(n == brute_force_colorings(c, p));
      if (arc_structure(c).arc_count <= 10) CHECK(n == coloring_count_exhaustive(c, p));
      std::uint64_t x = n;
      while (x % p == 0) x /= p;
      CHECK(x == 1);
      CHECK(n >= static_cast<std::uint64_t>(p));
    }
  }
}

TEST_CASE("fingerprint") {
  CHECK(fingerprint(code(kUnknot)) == fingerprint(code(kKink)));
  auto t = fingerprint(code(kTrefoil));
  auto u = fingerprint(code(kUnknot));
  CHECK(t != u);
  CHECK(t.colorings.at(3) == 9);
  CHECK(u.colorings.at(3) == 3);
  auto vt = fingerprint(code(kVirtualTrefoil));
  CHECK(vt.odd_writhe == 2);
  CHECK(t.odd_writhe == 0);
  CHECK_FALSE(fingerprint(code(kHopf)).odd_writhe.has_value());
  CHECK(fingerprint(code(kTrefoil), 3) == t);
}
