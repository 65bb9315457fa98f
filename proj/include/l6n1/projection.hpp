#pragma once

#include <array>
#include <optional>
#include <vector>

#include "l6n1/planar_map.hpp"

namespace l6n1 {

enum class Colour : std::uint8_t { Blue = 0, Red = 1, Green = 2 };

inline char colour_letter(Colour c) { return "BRG"[(int)c]; }
std::optional<Colour> colour_from_letter(char ch);

// Vertex classification. mono() vertices have both strands the same colour;
// otherwise the two strands give an unordered colour pair.
struct VertexType {
  Colour a, b;  // a <= b
  bool mono() const { return a == b; }
  bool operator==(const VertexType& o) const { return a == o.a && b == o.b; }
  bool has(Colour c) const { return a == c || b == c; }
  Colour other(Colour c) const { return a == c ? b : a; }
};

struct TypeCounts {
  int mono = 0;
  int br = 0, bg = 0, rg = 0;
  int bichromatic(Colour x, Colour y) const;
};

struct Section {
  int face;                  // face the run was found on (smallest key when shared)
  Colour colour;
  std::vector<Dart> darts;   // face-boundary darts of the run, in boundary order
  int end_vertex[2];         // bichromatic endpoints
  int length() const { return (int)darts.size(); }
};

struct ShortcutMove {
  int face;
  int edge_e, edge_e2;       // same-coloured edges on the face, edge_e < edge_e2
  Colour colour;
  // Walk slices of the colour walk cut at x (on edge_e) and y (on edge_e2).
  // Each slice is a contiguous run of walk darts; the first dart's edge is
  // the cut edge the slice leaves from. Internal vertex occurrences of a
  // slice are the head vertices of all darts after the first.
  std::vector<Dart> kept;
  std::vector<Dart> discarded;
  bool kept_colourful, discarded_colourful;
};

struct ThetaMove {
  int u, v, w;               // cycle u->v->w->u; u is monochromatic
  int edge_e;                // the parallel v-w edge on the empty side
  std::array<Dart, 3> cycle; // walk darts: u->v, v->w, w->u
  Dart loop_out, loop_in;    // the cycle's two darts at u (non-opposite slots)
};

struct DisposableDigon {
  int face;
  int edge1, edge2;
  int u, v;
};

struct SuperfluousWalk {
  int vertex;                 // monochromatic vertex
  std::vector<Dart> walk;     // the superfluous vertex-walk (dart slice)
};

struct DefectReport {
  std::vector<DisposableDigon> disposable_digons;
  std::vector<SuperfluousWalk> superfluous_walks;
  bool empty() const { return disposable_digons.empty() && superfluous_walks.empty(); }
};

// A planar map together with an edge 3-colouring whose classes are the three
// straight-ahead closed walks.
class Projection {
public:
  Projection() = default;  // empty; only make() yields a usable value
  static Projection make(PlanarMap map, std::vector<Colour> edge_colours);

  const PlanarMap& map() const { return map_; }
  Colour colour_of_edge(int e) const { return colour_[e]; }
  Colour colour_of_dart(Dart d) const { return colour_[map_.edge_of(d)]; }
  const std::vector<Colour>& edge_colours() const { return colour_; }

  VertexType vertex_type(int v) const { return types_[v]; }
  const std::vector<VertexType>& vertex_types() const { return types_; }
  TypeCounts type_counts() const;
  bool is_pairwise_crossing() const;

  // The colour's closed walk as stored in the map's straight-walk partition.
  const StraightWalk& walk_of(Colour c) const { return map_.straight_walks()[walk_index_[(int)c]]; }
  Colour colour_of_walk(int widx) const;

  std::vector<Section> good_sections() const;
  std::vector<ShortcutMove> find_shortcuts() const;
  std::vector<ThetaMove> find_thetas() const;
  DefectReport structural_defects() const;

  // Canonical form modulo colour permutation and reflection.
  std::string canonical_string_colour_blind() const;

  bool operator==(const Projection& o) const { return map_ == o.map_ && colour_ == o.colour_; }

private:
  PlanarMap map_;
  std::vector<Colour> colour_;
  std::vector<VertexType> types_;
  std::array<int, 3> walk_index_;  // colour -> index into map_.straight_walks()
};

}  // namespace l6n1
