#pragma once

#include "l6n1/diagram.hpp"
#include "l6n1/projection.hpp"

namespace l6n1 {
namespace fixtures {

// The two irreducible pairwise crossing projections: three closed curves
// pairwise crossing exactly twice, with and without a common triangle.
Projection p1();  // Krupp position: octahedral map, all eight faces triangles
Projection p2();  // non-Krupp position: three digon faces

// Reference diagram of L6n1: closure of the three-strand braid (s1 s2)^3,
// six coherent crossings (canonical orientations give writhe -6).
Diagram l6n1_reference_diagram();

// Small invariant-engine fixtures (not 3-coloured; raw maps + resolutions).
PlanarMap figure_eight_map();
PlanarMap hopf_map();
Resolution hopf_linked_resolution();    // |lk| = 1
Resolution hopf_unlinked_resolution();  // lk = 0
Resolution kink_positive_resolution();  // on figure_eight_map, writhe +1

// An 8-vertex pairwise crossing projection with a cut vertex (vertex 0): a
// blue curve whose second lobe is an empty kink behind a self-crossing.
Projection cut_vertex_fixture();

// 7-vertex projection obtained by folding the blue walk of p2 across its
// blue-red digon; carries theta configurations at the new vertex.
Projection theta_fixture();

// p2 with a red strand rerouted across another red edge: the two new
// crossings are monochromatic and bound a digon.
Projection mono_digon_fixture();

// p2 resolved so each pair of curves forms a clasp: a 6-crossing chain with
// pairwise |lk| = 1 that is not L6n1.
Diagram chain_link_diagram();

// Three curves where green meets nothing: a doubly-crossing pair plus a
// disjoint kinked circle. Valid but not pairwise crossing.
Projection split_green_fixture();

}  // namespace fixtures
}  // namespace l6n1
