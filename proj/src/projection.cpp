#include "l6n1/projection.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace l6n1 {

std::optional<Colour> colour_from_letter(char ch) {
  switch (ch) {
    case 'B': return Colour::Blue;
    case 'R': return Colour::Red;
    case 'G': return Colour::Green;
  }
  return std::nullopt;
}

int TypeCounts::bichromatic(Colour x, Colour y) const {
  if (x > y) std::swap(x, y);
  if (x == Colour::Blue && y == Colour::Red) return br;
  if (x == Colour::Blue && y == Colour::Green) return bg;
  return rg;
}

Projection Projection::make(PlanarMap map, std::vector<Colour> edge_colours) {
  Projection p;
  if ((int)edge_colours.size() != map.edge_count())
    fail(Errc::ValidationError, "expected one colour per edge");

  bool seen[3] = {false, false, false};
  for (Colour c : edge_colours) seen[(int)c] = true;
  for (int c = 0; c < 3; c++)
    if (!seen[c])
      fail(Errc::MissingColour, std::string("no edges coloured ") + colour_letter((Colour)c));

  auto colour_of_dart = [&](Dart d) { return edge_colours[map.edge_of(d)]; };

  // Transversality: each straight strand through a vertex is one colour, so
  // opposite slots must agree.
  for (int v = 0; v < map.vertex_count(); v++) {
    for (int s : {0, 1}) {
      if (colour_of_dart(make_dart(v, s)) != colour_of_dart(make_dart(v, s + 2)))
        fail(Errc::ColourNotStraight,
             "vertex " + std::to_string(v) + " has same-coloured ends off the straight pairing");
    }
  }

  // Each colour class must be exactly one closed curve.
  const auto& walks = map.straight_walks();
  if (walks.size() != 3)
    fail(Errc::ColourClassNotOneWalk,
         "projection splits into " + std::to_string(walks.size()) + " closed walks, need 3");
  p.walk_index_ = {-1, -1, -1};
  for (int i = 0; i < 3; i++) {
    const auto& w = walks[i];
    Colour c = edge_colours[w.edges[0]];
    for (int e : w.edges)
      if (edge_colours[e] != c)
        fail(Errc::ColourClassNotOneWalk, "a closed walk mixes colours");
    std::set<int> distinct(w.edges.begin(), w.edges.end());
    if (distinct.size() != w.edges.size())
      fail(Errc::ColourClassNotOneWalk, "a closed walk traverses an edge twice");
    if (p.walk_index_[(int)c] != -1)
      fail(Errc::ColourClassNotOneWalk,
           std::string("colour ") + colour_letter(c) + " forms more than one closed walk");
    p.walk_index_[(int)c] = i;
  }

  p.types_.resize(map.vertex_count());
  for (int v = 0; v < map.vertex_count(); v++) {
    Colour c1 = colour_of_dart(make_dart(v, 0));
    Colour c2 = colour_of_dart(make_dart(v, 1));
    if (c1 > c2) std::swap(c1, c2);
    p.types_[v] = VertexType{c1, c2};
  }

  p.map_ = std::move(map);
  p.colour_ = std::move(edge_colours);
  return p;
}

Colour Projection::colour_of_walk(int widx) const {
  for (int c = 0; c < 3; c++)
    if (walk_index_[c] == widx) return (Colour)c;
  fail(Errc::ValidationError, "walk index out of range");
}

TypeCounts Projection::type_counts() const {
  TypeCounts tc;
  for (const auto& t : types_) {
    if (t.mono())
      tc.mono++;
    else if (t.a == Colour::Blue && t.b == Colour::Red)
      tc.br++;
    else if (t.a == Colour::Blue && t.b == Colour::Green)
      tc.bg++;
    else
      tc.rg++;
  }
  return tc;
}

bool Projection::is_pairwise_crossing() const {
  TypeCounts tc = type_counts();
  return tc.br >= 1 && tc.bg >= 1 && tc.rg >= 1;
}

std::vector<Section> Projection::good_sections() const {
  // Key sections by their edge set: a length-one section is a maximal run on
  // both of its faces and must be reported once.
  std::map<std::vector<int>, Section> found;
  for (int f = 0; f < map_.face_count(); f++) {
    const auto& darts = map_.faces()[f].darts;
    int m = (int)darts.size();
    Colour first = colour_of_dart(darts[0]);
    bool mixed = false;
    for (Dart d : darts)
      if (colour_of_dart(d) != first) mixed = true;
    if (!mixed) continue;  // a monochromatic facial cycle has no sections

    // Start each scan at a colour change.
    int start = 0;
    while (colour_of_dart(darts[(start + m - 1) % m]) == colour_of_dart(darts[start])) start++;
    int k = start;
    do {
      Colour c = colour_of_dart(darts[k % m]);
      int j = k;
      while (colour_of_dart(darts[(j + 1) % m]) == c) j++;
      Section s;
      s.face = f;
      s.colour = c;
      for (int t = k; t <= j; t++) s.darts.push_back(darts[t % m]);
      s.end_vertex[0] = dart_vertex(darts[k % m]);
      s.end_vertex[1] = dart_vertex(darts[(j + 1) % m]);
      VertexType t0 = types_[s.end_vertex[0]], t1 = types_[s.end_vertex[1]];
      if (!t0.mono() && !t1.mono() && t0.has(c) && t1.has(c) && !(t0 == t1)) {
        std::vector<int> key;
        for (Dart d : s.darts) key.push_back(map_.edge_of(d));
        std::sort(key.begin(), key.end());
        auto it = found.find(key);
        if (it == found.end() || s.face < it->second.face) found[key] = s;
      }
      k = j + 1;
    } while (k % m != start);
  }
  std::vector<Section> out;
  for (auto& [k, s] : found) out.push_back(s);
  std::sort(out.begin(), out.end(), [](const Section& a, const Section& b) {
    return std::pair(a.darts[0], a.face) < std::pair(b.darts[0], b.face);
  });
  return out;
}

namespace {

// Does a walk slice contain bichromatic vertices of both types meeting `c`?
// Internal vertices are the tails of every dart after the first.
bool slice_colourful(const Projection& p, const std::vector<Dart>& slice, Colour c) {
  bool seen[3] = {false, false, false};
  for (size_t k = 1; k < slice.size(); k++) {
    VertexType t = p.vertex_type(dart_vertex(slice[k]));
    if (!t.mono() && t.has(c)) seen[(int)t.other(c)] = true;
  }
  int others = 0;
  for (int o = 0; o < 3; o++)
    if (o != (int)c && seen[o]) others++;
  return others == 2;
}

}  // namespace

std::vector<ShortcutMove> Projection::find_shortcuts() const {
  if (!is_pairwise_crossing())
    fail(Errc::NotPairwiseCrossing, "shortcut search requires a pairwise crossing projection");
  std::vector<ShortcutMove> out;
  for (int f = 0; f < map_.face_count(); f++) {
    const auto& darts = map_.faces()[f].darts;
    // Edges on this face, by colour.
    std::array<std::vector<int>, 3> by_colour;
    for (Dart d : darts) by_colour[(int)colour_of_dart(d)].push_back(map_.edge_of(d));
    for (int ci = 0; ci < 3; ci++) {
      auto& es = by_colour[ci];
      std::sort(es.begin(), es.end());
      Colour c = (Colour)ci;
      const StraightWalk& w = walk_of(c);
      int L = w.length();
      auto pos_of_edge = [&](int e) {
        auto [da, db] = map_.edges()[e];
        return map_.walk_position(da) >= 0 ? map_.walk_position(da) : map_.walk_position(db);
      };
      for (size_t i = 0; i < es.size(); i++) {
        for (size_t j = i + 1; j < es.size(); j++) {
          int pi = pos_of_edge(es[i]), pj = pos_of_edge(es[j]);
          auto slice = [&](int a, int b) {
            std::vector<Dart> s;
            for (int k = a;; k = (k + 1) % L) {
              s.push_back(w.darts[k]);
              if (k == b) break;
            }
            return s;
          };
          std::vector<Dart> A = slice(pi, pj), B = slice(pj, pi);
          bool ca = slice_colourful(*this, A, c), cb = slice_colourful(*this, B, c);
          if (!ca && !cb) continue;
          ShortcutMove mv;
          mv.face = f;
          mv.edge_e = es[i];
          mv.edge_e2 = es[j];
          mv.colour = c;
          bool discard_A;
          if (ca && cb) {
            // Prefer removing more vertices; break ties on the smaller
            // minimum dart of the discarded slice.
            if (A.size() != B.size())
              discard_A = A.size() > B.size();
            else
              discard_A = *std::min_element(A.begin(), A.end()) <
                          *std::min_element(B.begin(), B.end());
          } else {
            discard_A = cb;  // keep the colourful slice
          }
          mv.kept = discard_A ? B : A;
          mv.discarded = discard_A ? A : B;
          mv.kept_colourful = discard_A ? cb : ca;
          mv.discarded_colourful = discard_A ? ca : cb;
          out.push_back(std::move(mv));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ShortcutMove& a, const ShortcutMove& b) {
    return std::tuple(a.face, a.edge_e, a.edge_e2) < std::tuple(b.face, b.edge_e, b.edge_e2);
  });
  return out;
}

std::vector<ThetaMove> Projection::find_thetas() const {
  std::vector<ThetaMove> out;
  for (int u = 0; u < map_.vertex_count(); u++) {
    if (!types_[u].mono()) continue;
    Colour c = types_[u].a;
    const StraightWalk& wk = walk_of(c);
    int L = wk.length();
    std::vector<int> upos;
    for (int k = 0; k < L; k++)
      if (dart_vertex(wk.darts[k]) == u) upos.push_back(k);
    if (upos.size() != 2) continue;  // only double passages form vertex-walks
    for (int t = 0; t < 2; t++) {
      int a = upos[t], b = upos[1 - t];
      int len = (b - a + L) % L;
      if (len != 3) continue;
      Dart d0 = wk.darts[a], d1 = wk.darts[(a + 1) % L], d2 = wk.darts[(a + 2) % L];
      int v = dart_vertex(d1), w = dart_vertex(d2);
      if (v == w || v == u || w == u) continue;
      int cyc_vw = map_.edge_of(d1);
      for (int e = 0; e < map_.edge_count(); e++) {
        if (e == cyc_vw) continue;
        auto [p, q] = map_.edge_endpoints(e);
        if (!((p == v && q == w) || (p == w && q == v))) continue;
        // The side of the cycle holding e must hold nothing else: one face of
        // e is the digon with the cycle's v-w edge, the other the triangle
        // with the cycle's two u-edges.
        auto [dea, deb] = map_.edges()[e];
        int f1 = map_.face_of(dea), f2 = map_.face_of(deb);
        auto face_edges = [&](int f) {
          std::vector<int> es;
          for (Dart d : map_.faces()[f].darts) es.push_back(map_.edge_of(d));
          std::sort(es.begin(), es.end());
          return es;
        };
        std::vector<int> digon = {e, cyc_vw};
        std::sort(digon.begin(), digon.end());
        std::vector<int> tri = {e, map_.edge_of(d0), map_.edge_of(d2)};
        std::sort(tri.begin(), tri.end());
        bool ok = (face_edges(f1) == digon && face_edges(f2) == tri) ||
                  (face_edges(f2) == digon && face_edges(f1) == tri);
        if (!ok) continue;
        ThetaMove mv;
        mv.u = u;
        mv.v = v;
        mv.w = w;
        mv.edge_e = e;
        mv.cycle = {d0, d1, d2};
        mv.loop_out = d0;
        mv.loop_in = opposite(wk.darts[b]);
        out.push_back(mv);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ThetaMove& a, const ThetaMove& b) {
    return std::tuple(a.u, a.v, a.w, a.edge_e) < std::tuple(b.u, b.v, b.w, b.edge_e);
  });
  return out;
}

DefectReport Projection::structural_defects() const {
  if (!is_pairwise_crossing())
    fail(Errc::NotPairwiseCrossing, "defect scan requires a pairwise crossing projection");
  DefectReport rep;
  TypeCounts tc = type_counts();
  for (int f = 0; f < map_.face_count(); f++) {
    const auto& darts = map_.faces()[f].darts;
    if (darts.size() != 2) continue;
    int u = dart_vertex(darts[0]), v = dart_vertex(darts[1]);
    VertexType tu = types_[u], tv = types_[v];
    bool disposable = false;
    if (tu.mono() && tv.mono()) disposable = true;
    if (!tu.mono() && tu == tv && tc.bichromatic(tu.a, tu.b) > 2) disposable = true;
    if (disposable)
      rep.disposable_digons.push_back(
          {f, map_.edge_of(darts[0]), map_.edge_of(darts[1]), u, v});
  }
  for (int u = 0; u < map_.vertex_count(); u++) {
    if (!types_[u].mono()) continue;
    Colour c = types_[u].a;
    const StraightWalk& wk = walk_of(c);
    int L = wk.length();
    std::vector<int> upos;
    for (int k = 0; k < L; k++)
      if (dart_vertex(wk.darts[k]) == u) upos.push_back(k);
    if (upos.size() != 2) continue;
    auto slice = [&](int a, int b) {
      std::vector<Dart> s;
      for (int k = a; k != b; k = (k + 1) % L) s.push_back(wk.darts[k]);
      return s;
    };
    std::vector<Dart> w1 = slice(upos[0], upos[1]), w2 = slice(upos[1], upos[0]);
    bool c1 = slice_colourful(*this, w1, c);
    bool c2 = slice_colourful(*this, w2, c);
    if (c1) rep.superfluous_walks.push_back({u, w2});
    if (c2) rep.superfluous_walks.push_back({u, w1});
  }
  return rep;
}

std::string Projection::canonical_string_colour_blind() const {
  // Colour classes are exactly the straight-ahead components, so sphere
  // equivalence modulo colour permutation is plain map isomorphism.
  return map_.canonical_string(CanonicalOptions{true});
}

}  // namespace l6n1
