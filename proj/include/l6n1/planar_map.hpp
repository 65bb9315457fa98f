#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "l6n1/errors.hpp"

namespace l6n1 {

// Darts index edge-ends: dart d sits at vertex d/4 in rotation slot d%4,
// slots 0..3 listed counterclockwise. The two ends of a straight strand
// through a vertex occupy opposite slots (k and k+2), so straight-ahead
// traversal is pure slot arithmetic.
using Dart = std::int32_t;

inline int dart_vertex(Dart d) { return d >> 2; }
inline int dart_slot(Dart d) { return d & 3; }
inline Dart make_dart(int vertex, int slot) { return Dart(4 * vertex + slot); }
inline Dart opposite(Dart d) { return (d & ~3) | ((d + 2) & 3); }
inline Dart rot_next(Dart d) { return (d & ~3) | ((d + 1) & 3); }
inline Dart rot_prev(Dart d) { return (d & ~3) | ((d + 3) & 3); }

struct FaceWalk {
  std::vector<Dart> darts;  // phi-cycle, starting at the minimum dart
  int degree() const { return (int)darts.size(); }
};

struct StraightWalk {
  std::vector<Dart> darts;   // one traversal direction, starting at the walk's minimum dart
  std::vector<int> edges;    // edge ids in traversal order, same length
  int length() const { return (int)darts.size(); }
};

struct IsoResult {
  bool isomorphic = false;
  bool reflected = false;            // witness uses a reflection
  std::vector<Dart> dart_map;        // dart of a -> dart of b
  std::vector<int> vertex_map;       // vertex of a -> vertex of b
};

struct CanonicalOptions {
  bool allow_reflection = true;
};

// 4-regular multigraph embedded on the sphere, as a rotation system.
// Immutable after construction; V == 0 is rejected (a crossing-free closed
// curve has no darts to hang a rotation on).
class PlanarMap {
public:
  PlanarMap() = default;  // empty; only build() yields a usable value
  // `edges` lists alpha as dart pairs; the list order assigns edge ids.
  static PlanarMap build(int vertex_count, std::vector<std::pair<Dart, Dart>> edges);

  int vertex_count() const { return vertex_count_; }
  int dart_count() const { return 4 * vertex_count_; }
  int edge_count() const { return (int)edges_.size(); }
  int face_count() const { return (int)faces_.size(); }
  int component_count() const { return component_count_; }

  Dart alpha(Dart d) const { return alpha_[d]; }
  Dart face_next(Dart d) const { return rot_next(alpha_[d]); }  // phi = sigma o alpha
  Dart walk_next(Dart d) const { return opposite(alpha_[d]); }  // tau = straight-ahead step

  const std::vector<std::pair<Dart, Dart>>& edges() const { return edges_; }
  int edge_of(Dart d) const { return edge_of_[d]; }
  std::pair<int, int> edge_endpoints(int e) const {
    return {dart_vertex(edges_[e].first), dart_vertex(edges_[e].second)};
  }

  const std::vector<FaceWalk>& faces() const { return faces_; }
  int face_of(Dart d) const { return face_of_[d]; }

  // Partition of the edges into straight-ahead closed walks, ordered by each
  // walk's minimum dart. For link shadows these are the curve components.
  const std::vector<StraightWalk>& straight_walks() const { return walks_; }
  int walk_of_edge(int e) const { return walk_of_edge_[e]; }
  // Index of d within its walk's stored direction, or -1 when the stored
  // direction uses the other dart of d's edge.
  int walk_position(Dart d) const { return walk_pos_[d]; }

  // True when no vertex repeats on the face boundary.
  bool face_is_cycle(int face) const;

  // Canonical form under rotation-system isomorphism (sphere equivalence).
  // `edge_key` optionally labels edges (e.g. colours modulo a permutation);
  // empty means unlabelled.
  std::vector<std::int32_t> canonical_form(const CanonicalOptions& opts,
                                           const std::vector<int>& edge_key = {}) const;
  std::string canonical_string(const CanonicalOptions& opts,
                               const std::vector<int>& edge_key = {}) const;

  friend IsoResult are_isomorphic(const PlanarMap& a, const PlanarMap& b, bool allow_reflection);

  bool operator==(const PlanarMap& o) const {
    return vertex_count_ == o.vertex_count_ && edges_ == o.edges_;
  }

  // Canonical relabelling seeded at (start dart, orientation); low-level
  // building block of canonical_form. Covers only the seed's component.
  std::vector<std::int32_t> seeded_code(Dart start, bool reflected,
                                        const std::vector<int>& edge_key,
                                        std::vector<Dart>* relabel) const;

private:
  void validate_and_index();

  int vertex_count_ = 0;
  int component_count_ = 0;
  std::vector<Dart> alpha_;
  std::vector<std::pair<Dart, Dart>> edges_;
  std::vector<int> edge_of_;
  std::vector<FaceWalk> faces_;
  std::vector<int> face_of_;
  std::vector<StraightWalk> walks_;
  std::vector<int> walk_of_edge_;
  std::vector<int> walk_pos_;
};

IsoResult are_isomorphic(const PlanarMap& a, const PlanarMap& b, bool allow_reflection);

}  // namespace l6n1
