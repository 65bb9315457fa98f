#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "l6n1/projection.hpp"

namespace l6n1 {

struct EnumerationFilter {
  int vertices = 6;
  bool pairwise_crossing_only = false;
  bool connected_only = false;
  int cap = 8;  // exhaustive ceiling
};

// All isomorphism classes (colour permutations and reflections allowed) of
// 3-curve projections with exactly `vertices` crossings, in a deterministic
// order. Throws CapExceeded above the filter cap.
std::vector<Projection> enumerate_projections(const EnumerationFilter& f);
void enumerate_projections(const EnumerationFilter& f,
                           const std::function<void(const Projection&)>& yield);

// Seeded pairwise crossing projection with exactly n vertices, grown from an
// irreducible by inverse reduction moves. Deterministic per seed.
Projection random_projection(int n, std::uint64_t seed);

namespace detail {

// Reroute colour-walk edge `a` across edge `b` on face `f` and back: adds two
// crossings on b. `a_dart`/`b_dart` are the f-sides of distinct edges.
Projection bump(const Projection& p, int face, Dart a_dart, Dart b_dart);

// Inverse theta-split across a digon face {f_edge, g_edge}: refolds the
// f-coloured walk so its continuation edges cross beside the digon. Adds one
// monochromatic vertex.
Projection graft_theta(const Projection& p, int digon_face, int f_edge);

// Digon faces usable by graft_theta, as (face, f_edge) choices.
std::vector<std::pair<int, int>> graft_sites(const Projection& p);

}  // namespace detail

}  // namespace l6n1
