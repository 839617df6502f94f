#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "vlink/surface.hpp"

using namespace vlink;
using namespace vlink::testing;

namespace {

int genus_total(const SurfaceDiagram& d) {
  int g = 0;
  for (int x : supporting_genus(d)) g += x;
  return g;
}

std::size_t edge_count(const SurfaceDiagram& d) {
  // every link component is a cycle of edges; a free loop is one edge
  return d.code.symbol_count() + d.free_loops.size();
}

SurfaceDiagram random_stabilization(const SurfaceDiagram& d, std::mt19937_64& rng, int steps) {
  SurfaceDiagram s = d;
  for (int i = 0; i < steps; ++i) {
    int f = static_cast<int>(rng() % s.faces.size());
    if (s.faces.size() > 1 && rng() % 2 == 0) {
      int g = static_cast<int>(rng() % (s.faces.size() - 1));
      if (g >= f) ++g;
      s = stabilize(s, f, StabilizeKind::SplitWalkPair, g);
    } else {
      s = stabilize(s, f, StabilizeKind::AddHandle);
    }
    REQUIRE(check_diagram(s).empty());
  }
  return s;
}

}  // namespace

TEST_CASE("carter_embed: unknot") {
  auto d = carter_embed(code(kUnknot));
  CHECK(d.crossings.empty());
  CHECK(d.surface_components.size() == 1);
  CHECK(supporting_genus(d) == std::vector<int>{0});
  CHECK(d.faces.size() == 2);
  CHECK(edge_count(d) == 1);
  for (const auto& f : d.faces) CHECK(f.is_disk());
}

TEST_CASE("carter_embed: trefoil, virtual trefoil, virtual Hopf against the face oracle") {
  struct Row {
    const char* text;
    int v, e, f, genus;
  };
  for (Row r : {Row{kTrefoil, 3, 6, 5, 0}, Row{kVirtualTrefoil, 2, 4, 2, 1}, Row{kVirtualHopf, 1, 2, 1, 1}}) {
    CAPTURE(r.text);
    auto oracle = face_census(code(r.text));
    REQUIRE(oracle.vertices == r.v);
    REQUIRE(oracle.edges == r.e);
    REQUIRE(oracle.faces == r.f);
    auto d = carter_embed(code(r.text));
    CHECK(static_cast<int>(d.crossings.size()) == r.v);
    CHECK(static_cast<int>(edge_count(d)) == r.e);
    CHECK(static_cast<int>(d.faces.size()) == r.f);
    CHECK(supporting_genus(d) == std::vector<int>{r.genus});
    CHECK(carter_genus(d.code) == r.genus);
  }
}

TEST_CASE("property: carter_embed matches the face oracle and reads back its code") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 400; ++t) {
    auto c = random_small_code(rng, 8);
    CAPTURE(serialize_gauss(c));
    auto d = carter_embed(c);
    auto oracle = face_census(c);
    CHECK(static_cast<int>(d.faces.size()) == oracle.faces);
    CHECK(static_cast<int>(d.surface_components.size()) == oracle.components);
    CHECK(genus_total(d) == oracle.genus_sum());
    CHECK(carter_genus(c) == oracle.genus_sum());
    CHECK(check_diagram(d).empty());
    CHECK(read_gauss(d) == c);
    for (const auto& f : d.faces) CHECK(f.is_disk());
    CHECK(destabilize_fully(d) == d);
  }
}

TEST_CASE("stabilize: AddHandle on the trefoil") {
  auto d = carter_embed(code(kTrefoil));
  auto s = stabilize(d, 2, StabilizeKind::AddHandle);
  CHECK(supporting_genus(s) == std::vector<int>{1});
  CHECK(s.faces[2].genus == 1);
  CHECK(s.code == d.code);
  CHECK(check_diagram(s).empty());
  auto back = destabilize_fully(s);
  CHECK(isomorphic(back, d));
  CHECK(supporting_genus(back) == std::vector<int>{0});
}

TEST_CASE("stabilize: sphere with a circle becomes a torus") {
  auto s = stabilize(carter_embed(code(kUnknot)), 0, StabilizeKind::AddHandle);
  CHECK(supporting_genus(s) == std::vector<int>{1});
  CHECK(s.free_loops.size() == 1);
}

TEST_CASE("stabilize: tube between two surface components merges and splits back") {
  auto c = code("O1+U2+O3+U1+O2+U3+/0");
  auto d = carter_embed(c);
  REQUIRE(d.surface_components.size() == 2);
  // join a trefoil face to a face of the free loop's sphere
  int a = 0, b = -1;
  for (int i = 0; i < static_cast<int>(d.faces.size()); ++i)
    if (d.faces[i].component != d.faces[a].component) b = i;
  REQUIRE(b >= 0);
  auto s = stabilize(d, a, StabilizeKind::SplitWalkPair, b);
  CHECK(s.surface_components.size() == 1);
  CHECK(supporting_genus(s) == std::vector<int>{0});
  CHECK(check_diagram(s).empty());
  auto back = destabilize_fully(s);
  CHECK(back.surface_components.size() == 2);
  CHECK(isomorphic(back, d));
}

TEST_CASE("stabilize: invalid face reference") {
  auto d = carter_embed(code(kTrefoil));
  CHECK_THROWS_AS(stabilize(d, 99, StabilizeKind::AddHandle), SurfaceError);
  CHECK_THROWS_AS(stabilize(d, 0, StabilizeKind::SplitWalkPair, 0), SurfaceError);
  CHECK_THROWS_AS(stabilize(d, 0, StabilizeKind::SplitWalkPair), SurfaceError);
}

TEST_CASE("drop_empty_components") {
  auto d = carter_embed(code(kTrefoil));
  CHECK(drop_empty_components(d) == d);
  CHECK(drop_empty_components(with_bare_component(d, 1)) == d);
  auto u = carter_embed(code(kUnknot));
  CHECK(drop_empty_components(with_bare_component(u, 0)) == u);
  CHECK_FALSE(check_diagram(with_bare_component(u, 0)).empty());
  CHECK(check_diagram(with_bare_component(u, 0), false).empty());
}

TEST_CASE("property: random stabilizations destabilize back to the Carter surface") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    auto c = random_small_code(rng, 6);
    CAPTURE(serialize_gauss(c));
    auto d = carter_embed(c);
    auto s = random_stabilization(d, rng, 1 + static_cast<int>(rng() % 5));
    if (rng() % 4 == 0) s = with_bare_component(s, static_cast<int>(rng() % 3));
    auto back = destabilize_fully(s);
    CHECK(isomorphic(back, d));
    CHECK(back.code == c);
    CHECK(supporting_genus(back) == supporting_genus(d));
    CHECK(destabilize_fully(back) == back);
    CHECK(check_diagram(back).empty());
  }
}

TEST_CASE("signature separates mirror images and ignores labels") {
  auto a = carter_embed(code(kTrefoil));
  auto b = carter_embed(code("O4+U6+O5+U4+O6+U5+"));
  CHECK(isomorphic(a, b));
  CHECK_FALSE(isomorphic(a, carter_embed(code(kMirrorTrefoil))));
}

TEST_CASE("dump is stable") {
  auto d = carter_embed(code(kKink));
  CHECK(dump(d) == dump(carter_embed(code(kKink))));
  CHECK_FALSE(dump(d).empty());
}
