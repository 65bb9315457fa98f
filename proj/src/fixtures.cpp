#include "l6n1/fixtures.hpp"

#include "l6n1/generator.hpp"

namespace l6n1 {
namespace fixtures {

namespace {

Projection coloured(int vertices, std::vector<std::pair<Dart, Dart>> edges,
                    const char* colour_letters) {
  auto map = PlanarMap::build(vertices, std::move(edges));
  std::vector<Colour> cols;
  for (const char* p = colour_letters; *p; p++) cols.push_back(*colour_from_letter(*p));
  return Projection::make(std::move(map), std::move(cols));
}

}  // namespace

Projection p1() {
  // Octahedral arrangement: vertices 0,1 carry blue/red, 2,3 blue/green,
  // 4,5 red/green; the three curves are the coordinate squares.
  return coloured(6,
                  {{0, 9},
                   {1, 16},
                   {2, 15},
                   {3, 20},
                   {4, 11},
                   {5, 22},
                   {6, 13},
                   {7, 18},
                   {8, 17},
                   {10, 23},
                   {12, 19},
                   {14, 21}},
                  "BRBRBRBRGGGG");
}

Projection p2() {
  // Chain arrangement: vertices 0,1 blue/red, 2,3 blue/green, 4,5 red/green;
  // each pair of curves bounds an empty lens.
  return coloured(6,
                  {{0, 23},
                   {1, 14},
                   {2, 5},
                   {3, 4},
                   {6, 9},
                   {7, 16},
                   {8, 17},
                   {10, 13},
                   {11, 12},
                   {15, 22},
                   {18, 21},
                   {19, 20}},
                  "RBRBBRGGBGRG");
}

Diagram l6n1_reference_diagram() {
  // Closure of (s1 s2)^3: crossings are rows of the braid, slots are
  // NE,NW,SW,SE; the overstrand runs NW-SE everywhere.
  Projection proj = coloured(6,
                             {{0, 22},
                              {1, 18},
                              {2, 9},
                              {3, 5},
                              {4, 23},
                              {6, 8},
                              {7, 12},
                              {10, 17},
                              {11, 13},
                              {14, 16},
                              {15, 20},
                              {19, 21}},
                             "RBRBGGBGRBRG");
  Resolution res{std::vector<std::uint8_t>(6, 1)};
  return Diagram{std::move(proj), std::move(res)};
}

PlanarMap figure_eight_map() { return PlanarMap::build(1, {{0, 1}, {2, 3}}); }

PlanarMap hopf_map() { return PlanarMap::build(2, {{0, 7}, {1, 6}, {2, 5}, {3, 4}}); }

Resolution hopf_linked_resolution() { return Resolution{{1, 1}}; }

Resolution hopf_unlinked_resolution() { return Resolution{{1, 0}}; }

Resolution kink_positive_resolution() { return Resolution{{1}}; }

Projection cut_vertex_fixture() {
  // Vertices: 0 = cut vertex (mono blue), 1 = mono blue kink, 2,4 blue/red,
  // 3,5 blue/green, 6,7 red/green. Blue runs through the red/green lens and
  // closes with an empty-ish kink lobe behind vertex 0.
  return coloured(8,
                  {{0, 10},
                   {8, 14},
                   {12, 18},
                   {16, 22},
                   {20, 3},
                   {1, 4},
                   {6, 7},
                   {5, 2},
                   {11, 30},
                   {28, 19},
                   {17, 27},
                   {25, 9},
                   {15, 29},
                   {31, 23},
                   {21, 24},
                   {26, 13}},
                  "BBBBBBBBRRRRGGGG");
}

Projection theta_fixture() {
  // Fold the blue walk of p2 across its blue-red digon.
  Projection base = p2();
  for (auto [face, f_edge] : detail::graft_sites(base)) {
    if (base.colour_of_edge(f_edge) == Colour::Blue) {
      const auto& fd = base.map().faces()[face].darts;
      int other = base.map().edge_of(fd[0]) == f_edge ? base.map().edge_of(fd[1])
                                                      : base.map().edge_of(fd[0]);
      if (base.colour_of_edge(other) == Colour::Red)
        return detail::graft_theta(base, face, f_edge);
    }
  }
  fail(Errc::ValidationError, "p2 lost its blue-red digon");
}

Projection mono_digon_fixture() {
  // p2's outer face carries two red edges; bump one across the other.
  Projection base = p2();
  const auto& m = base.map();
  for (int f = 0; f < m.face_count(); f++) {
    const auto& darts = m.faces()[f].darts;
    if (darts.size() != 4) continue;
    std::vector<Dart> red;
    for (Dart d : darts)
      if (base.colour_of_dart(d) == Colour::Red) red.push_back(d);
    if (red.size() == 2) return detail::bump(base, f, red[0], red[1]);
  }
  fail(Errc::ValidationError, "p2 lost its double-red face");
}

Projection split_green_fixture() {
  // Vertices 0,1: the blue/red doubly-crossing pair; vertex 2: a green
  // figure-eight on its own.
  return coloured(3, {{0, 7}, {1, 6}, {2, 5}, {3, 4}, {8, 9}, {10, 11}}, "RBRBGG");
}

Diagram chain_link_diagram() {
  Projection proj = p2();
  // Clasp every lens: the parity-1 strands alternate around each digon pair,
  // so all-ones puts a different curve on top at the two ends of each lens.
  Resolution res{{1, 1, 1, 1, 1, 1}};
  return Diagram{std::move(proj), std::move(res)};
}

}  // namespace fixtures
}  // namespace l6n1
