#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "doctest.h"
#include "l6n1/fixtures.hpp"
#include "l6n1/planar_map.hpp"

using namespace l6n1;

namespace {

std::vector<int> face_degrees(const PlanarMap& m) {
  std::vector<int> d;
  for (const auto& f : m.faces()) d.push_back(f.degree());
  std::sort(d.begin(), d.end());
  return d;
}

// Relabel vertices by a permutation, keeping each rotation.
PlanarMap permuted(const PlanarMap& m, const std::vector<int>& perm) {
  std::vector<std::pair<Dart, Dart>> edges;
  for (auto [a, b] : m.edges())
    edges.push_back({make_dart(perm[dart_vertex(a)], dart_slot(a)),
                     make_dart(perm[dart_vertex(b)], dart_slot(b))});
  return PlanarMap::build(m.vertex_count(), std::move(edges));
}

PlanarMap reflected(const PlanarMap& m) {
  auto flip = [](Dart d) { return make_dart(dart_vertex(d), (4 - dart_slot(d)) & 3); };
  std::vector<std::pair<Dart, Dart>> edges;
  for (auto [a, b] : m.edges()) edges.push_back({flip(a), flip(b)});
  return PlanarMap::build(m.vertex_count(), std::move(edges));
}

}  // namespace

TEST_CASE("figure eight validates with three faces") {
  PlanarMap m = fixtures::figure_eight_map();
  CHECK(m.vertex_count() == 1);
  CHECK(m.edge_count() == 2);
  CHECK(m.face_count() == 3);
  CHECK(face_degrees(m) == std::vector<int>{1, 1, 2});
  CHECK(m.component_count() == 1);
  REQUIRE(m.straight_walks().size() == 1);
  CHECK(m.straight_walks()[0].length() == 2);
}

TEST_CASE("self-paired dart is rejected") {
  CHECK_THROWS_WITH_AS(PlanarMap::build(1, {{0, 0}, {1, 2}}), doctest::Contains("itself"),
                       Error);
  try {
    PlanarMap::build(1, {{0, 0}, {1, 2}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotInvolution);
  }
}

TEST_CASE("dart reuse is rejected") {
  try {
    PlanarMap::build(1, {{0, 1}, {1, 2}});
    FAIL("expected NotInvolution");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotInvolution);
  }
}

TEST_CASE("zero-vertex maps are not representable") {
  try {
    PlanarMap::build(0, {});
    FAIL("expected VertexlessComponent");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::VertexlessComponent);
  }
}

TEST_CASE("toroidal rotation system is rejected") {
  try {
    PlanarMap::build(1, {{0, 2}, {1, 3}});
    FAIL("expected NotSpherical");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSpherical);
  }
}

TEST_CASE("p1 map has octahedral counts") {
  PlanarMap m = fixtures::p1().map();
  CHECK(m.vertex_count() == 6);
  CHECK(m.edge_count() == 12);
  CHECK(m.face_count() == 8);
  CHECK(face_degrees(m) == std::vector<int>(8, 3));
  REQUIRE(m.straight_walks().size() == 3);
  for (const auto& w : m.straight_walks()) CHECK(w.length() == 4);
  for (int f = 0; f < m.face_count(); f++) CHECK(m.face_is_cycle(f));
}

TEST_CASE("p2 map carries three digons") {
  PlanarMap m = fixtures::p2().map();
  CHECK(m.vertex_count() == 6);
  CHECK(m.face_count() == 8);
  CHECK(face_degrees(m) == std::vector<int>{2, 2, 2, 3, 3, 4, 4, 4});
  REQUIRE(m.straight_walks().size() == 3);
  for (const auto& w : m.straight_walks()) CHECK(w.length() == 4);
}

TEST_CASE("straight walks partition the edges") {
  for (const PlanarMap& m : {fixtures::p1().map(), fixtures::p2().map(),
                             fixtures::cut_vertex_fixture().map()}) {
    std::vector<int> count(m.edge_count(), 0);
    for (const auto& w : m.straight_walks())
      for (int e : w.edges) count[e]++;
    CHECK(std::all_of(count.begin(), count.end(), [](int c) { return c == 1; }));
    int total = 0;
    for (const auto& f : m.faces()) total += f.degree();
    CHECK(total == 2 * m.edge_count());
  }
}

TEST_CASE("isomorphism accepts relabelled maps and rejects p1 vs p2") {
  PlanarMap p1 = fixtures::p1().map();
  PlanarMap p2 = fixtures::p2().map();

  std::vector<int> perm = {3, 5, 0, 2, 4, 1};
  PlanarMap shuffled = permuted(p1, perm);
  IsoResult iso = are_isomorphic(p1, shuffled, false);
  REQUIRE(iso.isomorphic);
  // The witness must transport alpha onto alpha.
  for (Dart d = 0; d < p1.dart_count(); d++)
    CHECK(iso.dart_map[p1.alpha(d)] == shuffled.alpha(iso.dart_map[d]));

  CHECK_FALSE(are_isomorphic(p1, p2, true).isomorphic);
  CHECK_FALSE(are_isomorphic(p1, p2, false).isomorphic);
}

TEST_CASE("both irreducible maps are mirror symmetric") {
  // Verified by running the search both ways on the fixtures.
  for (const PlanarMap& m : {fixtures::p1().map(), fixtures::p2().map()}) {
    PlanarMap r = reflected(m);
    CHECK(are_isomorphic(m, r, true).isomorphic);
    CHECK(are_isomorphic(m, r, false).isomorphic);
    CHECK(are_isomorphic(r, m, false).isomorphic);
  }
}

TEST_CASE("isomorphism is an equivalence on the fixture set") {
  std::vector<PlanarMap> maps = {fixtures::p1().map(), fixtures::p2().map(),
                                 fixtures::hopf_map(), fixtures::figure_eight_map(),
                                 fixtures::cut_vertex_fixture().map()};
  // Two shuffles of p2 for the transitivity leg.
  maps.push_back(permuted(maps[1], {5, 4, 3, 2, 1, 0}));
  maps.push_back(permuted(maps[1], {2, 0, 4, 1, 5, 3}));
  for (const auto& a : maps) CHECK(are_isomorphic(a, a, true).isomorphic);
  for (const auto& a : maps)
    for (const auto& b : maps) {
      IsoResult ab = are_isomorphic(a, b, true), ba = are_isomorphic(b, a, true);
      CHECK(ab.isomorphic == ba.isomorphic);
      if (!ab.isomorphic) continue;
      for (const auto& c : maps)
        if (are_isomorphic(b, c, true).isomorphic) CHECK(are_isomorphic(a, c, true).isomorphic);
    }
}

TEST_CASE("canonical form is invariant under vertex relabelling") {
  PlanarMap p2 = fixtures::p2().map();
  std::mt19937 rng(7);
  std::vector<int> perm(6);
  for (int round = 0; round < 10; round++) {
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    PlanarMap q = permuted(p2, perm);
    CHECK(q.canonical_string(CanonicalOptions{true}) ==
          p2.canonical_string(CanonicalOptions{true}));
  }
}
