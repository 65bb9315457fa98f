#include <set>

#include "doctest.h"
#include "l6n1/fixtures.hpp"
#include "l6n1/generator.hpp"
#include "l6n1/io.hpp"
#include "l6n1/reduction.hpp"

using namespace l6n1;

TEST_CASE("bump adds two crossings and a digon between them") {
  Projection p = fixtures::mono_digon_fixture();
  CHECK(p.map().vertex_count() == 8);
  CHECK(p.is_pairwise_crossing());
  bool new_digon = false;
  for (const auto& f : p.map().faces()) {
    if (f.degree() != 2) continue;
    if (dart_vertex(f.darts[0]) >= 6 && dart_vertex(f.darts[1]) >= 6) new_digon = true;
  }
  CHECK(new_digon);
}

TEST_CASE("grafts exist on every digon of the chain irreducible") {
  auto sites = detail::graft_sites(fixtures::p2());
  CHECK(sites.size() == 6);
  for (auto [face, f_edge] : sites) {
    Projection host = detail::graft_theta(fixtures::p2(), face, f_edge);
    CHECK(host.map().vertex_count() == 7);
    CHECK(host.is_pairwise_crossing());
  }
  CHECK(detail::graft_sites(fixtures::p1()).empty());
}

TEST_CASE("no pairwise crossing projections below six vertices") {
  for (int n = 3; n <= 5; n++) {
    EnumerationFilter f;
    f.vertices = n;
    f.pairwise_crossing_only = true;
    CHECK(enumerate_projections(f).empty());
  }
}

TEST_CASE("exactly two pairwise crossing classes at six vertices") {
  EnumerationFilter f;
  f.vertices = 6;
  f.pairwise_crossing_only = true;
  auto classes = enumerate_projections(f);
  REQUIRE(classes.size() == 2);
  int krupp = 0, nonkrupp = 0;
  for (const auto& p : classes) {
    CHECK(is_irreducible(p));
    auto cls = classify_irreducible(p);
    (cls.cls == IrreducibleClass::Krupp ? krupp : nonkrupp)++;
  }
  CHECK(krupp == 1);
  CHECK(nonkrupp == 1);
}

TEST_CASE("seven-vertex pairwise crossing classes are pinned") {
  EnumerationFilter f;
  f.vertices = 7;
  f.pairwise_crossing_only = true;
  auto classes = enumerate_projections(f);
  INFO("count=" << classes.size());
  // Exhaustive run, committed as a regression constant.
  CHECK(classes.size() == 6);
  for (const auto& p : classes) {
    CHECK(p.map().vertex_count() == 7);
    CHECK(p.is_pairwise_crossing());
  }
}

TEST_CASE("enumeration output is isomorph-free and valid") {
  EnumerationFilter f;
  f.vertices = 6;
  auto classes = enumerate_projections(f);
  CHECK(classes.size() == 178);  // exhaustive run, regression constant
  std::set<std::string> keys;
  for (const auto& p : classes) {
    CHECK(keys.insert(p.canonical_string_colour_blind()).second);
    CHECK(p.map().vertex_count() == 6);
    auto tc = p.type_counts();
    CHECK(tc.br % 2 == 0);
    CHECK(tc.bg % 2 == 0);
    CHECK(tc.rg % 2 == 0);
  }
  // Spot check: pairwise are_isomorphic is false across distinct classes.
  for (std::size_t i = 0; i + 1 < std::min<std::size_t>(classes.size(), 6); i++)
    CHECK_FALSE(are_isomorphic(classes[i].map(), classes[i + 1].map(), true).isomorphic);
}

TEST_CASE("enumeration cap is enforced") {
  EnumerationFilter f;
  f.vertices = 9;
  try {
    enumerate_projections(f);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CapExceeded);
  }
}

TEST_CASE("six-vertex random projections are the irreducibles") {
  std::set<IrreducibleClass> seen;
  for (int seed = 0; seed < 12; seed++) {
    Projection p = random_projection(6, seed);
    seen.insert(classify_irreducible(p).cls);
  }
  CHECK(seen.size() == 2);
}

TEST_CASE("random projections are deterministic per seed") {
  Projection a = random_projection(14, 1);
  Projection b = random_projection(14, 1);
  CHECK(serialize_projection(a) == serialize_projection(b));
  Projection c = random_projection(14, 2);
  CHECK(serialize_projection(a) != serialize_projection(c));
}

TEST_CASE("random projections are valid, pairwise crossing and reducible") {
  for (int seed = 0; seed < 24; seed++) {
    int n = 7 + seed % 8;
    Projection p = random_projection(n, 100 + seed);
    CHECK(p.map().vertex_count() == n);
    CHECK(p.is_pairwise_crossing());
    auto res = reduce(p);
    CHECK((int)res.trace.steps.size() <= n - 6);
    CHECK(res.reduced.map().vertex_count() == 6);
  }
}

TEST_CASE("small vertex counts are rejected") {
  try {
    random_projection(5, 1);
    FAIL("expected Infeasible");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Infeasible);
  }
}
