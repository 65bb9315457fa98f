#include "l6n1/link_invariants.hpp"

#include <algorithm>
#include <cstdlib>

#include "l6n1/fixtures.hpp"

namespace l6n1 {

Laurent bracket_delta() {
  return Laurent::monomial(-1, 2) + Laurent::monomial(-1, -2);
}

Laurent bracket_of_crossingless_loops(int k) {
  if (k < 1) fail(Errc::ValidationError, "need at least one loop");
  Laurent r(1);
  for (int i = 1; i < k; i++) r = r * bracket_delta();
  return r;
}

int crossing_cap() {
  if (const char* s = std::getenv("L6N1_MAX_CROSSINGS")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  return 20;
}

namespace {

int effective_cap(int cap) { return cap > 0 ? cap : crossing_cap(); }

struct MiniDsu {
  std::vector<int> p;
  void reset(int n) {
    p.resize(n);
    for (int i = 0; i < n; i++) p[i] = i;
  }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

// Exit dart of the parity-p strand at vertex v under the given orientation.
Dart strand_exit(const PlanarMap& m, const Orientation& orient, int v, int p) {
  Dart d1 = make_dart(v, p), d2 = make_dart(v, p + 2);
  int w = m.walk_of_edge(m.edge_of(d1));
  bool rev = orient.reversed[w] != 0;
  bool d1_fwd = m.walk_position(d1) >= 0;
  return (d1_fwd != rev) ? d1 : d2;
}

int crossing_sign(const PlanarMap& m, const Resolution& res, const Orientation& orient, int v) {
  int o = res.over_parity[v] ? 1 : 0;
  Dart over_exit = strand_exit(m, orient, v, o);
  Dart under_exit = strand_exit(m, orient, v, 1 - o);
  return dart_slot(under_exit) == ((dart_slot(over_exit) + 1) & 3) ? 1 : -1;
}

}  // namespace

Laurent kauffman_bracket(const PlanarMap& map, const Resolution& res, int cap) {
  const int n = map.vertex_count();
  if (n > effective_cap(cap))
    fail(Errc::TooManyCrossings,
         std::to_string(n) + " crossings exceed the cap " + std::to_string(effective_cap(cap)));
  if ((int)res.over_parity.size() != n)
    fail(Errc::ValidationError, "resolution does not match the vertex set");

  // Per vertex, the dart pairings of the A-smoothing, derived by rotating the
  // overstrand counterclockwise onto the understrand; the B-smoothing joins
  // the complementary pairs.
  const Laurent delta = bracket_delta();
  std::vector<Laurent> delta_pow(2 * n + 2);
  delta_pow[0] = Laurent(1);
  for (int i = 1; i < (int)delta_pow.size(); i++) delta_pow[i] = delta_pow[i - 1] * delta;

  MiniDsu dsu;
  Laurent total;
  const int nd = map.dart_count();
  for (std::uint32_t state = 0; state < (1u << n); state++) {
    dsu.reset(nd);
    int a_count = 0;
    for (int v = 0; v < n; v++) {
      int o = res.over_parity[v] ? 1 : 0;
      bool a_smoothing = (state >> v) & 1;
      if (a_smoothing) a_count++;
      // A: (o+1,o+2) and (o+3,o); B: (o,o+1) and (o+2,o+3).
      int base = a_smoothing ? o + 1 : o;
      dsu.unite(make_dart(v, base & 3), make_dart(v, (base + 1) & 3));
      dsu.unite(make_dart(v, (base + 2) & 3), make_dart(v, (base + 3) & 3));
    }
    for (Dart d = 0; d < nd; d++) dsu.unite(d, map.alpha(d));
    int loops = 0;
    for (Dart d = 0; d < nd; d++)
      if (dsu.find(d) == d) loops++;
    total += Laurent::monomial(1, a_count - (n - a_count)) * delta_pow[loops - 1];
  }
  return total;
}

int writhe(const PlanarMap& map, const Resolution& res, const Orientation& orient) {
  int w = 0;
  for (int v = 0; v < map.vertex_count(); v++) w += crossing_sign(map, res, orient, v);
  return w;
}

int linking_number(const PlanarMap& map, const Resolution& res, const Orientation& orient,
                   int comp_i, int comp_j) {
  if (comp_i == comp_j) fail(Errc::ValidationError, "linking number needs distinct components");
  int s = 0;
  for (int v = 0; v < map.vertex_count(); v++) {
    int w0 = map.walk_of_edge(map.edge_of(make_dart(v, 0)));
    int w1 = map.walk_of_edge(map.edge_of(make_dart(v, 1)));
    if ((w0 == comp_i && w1 == comp_j) || (w0 == comp_j && w1 == comp_i))
      s += crossing_sign(map, res, orient, v);
  }
  if (s % 2 != 0) fail(Errc::ValidationError, "odd signed intersection count");
  return s / 2;
}

Laurent jones(const PlanarMap& map, const Resolution& res, const Orientation& orient, int cap) {
  int w = writhe(map, res, orient);
  Laurent pre = Laurent::power(Laurent::monomial(-1, 3), -w);
  return pre * kauffman_bracket(map, res, cap);
}

std::set<Laurent> jones_all_orientations(const PlanarMap& map, const Resolution& res, int cap) {
  int nc = (int)map.straight_walks().size();
  Laurent b = kauffman_bracket(map, res, cap);
  std::set<Laurent> out;
  for (int bits = 0; bits < (1 << nc); bits++) {
    Orientation orient = Orientation::canonical(nc);
    for (int c = 0; c < nc; c++) orient.reversed[c] = (bits >> c) & 1;
    int w = writhe(map, res, orient);
    out.insert(Laurent::power(Laurent::monomial(-1, 3), -w) * b);
  }
  return out;
}

Laurent kauffman_bracket(const Diagram& d, int cap) {
  return kauffman_bracket(d.projection.map(), d.resolution, cap);
}

Laurent jones(const Diagram& d, int cap) {
  auto& m = d.projection.map();
  return jones(m, d.resolution, Orientation::canonical((int)m.straight_walks().size()), cap);
}

int writhe(const Diagram& d) {
  auto& m = d.projection.map();
  return writhe(m, d.resolution, Orientation::canonical((int)m.straight_walks().size()));
}

int linking_number(const Diagram& d, int comp_i, int comp_j) {
  auto& m = d.projection.map();
  return linking_number(m, d.resolution, Orientation::canonical((int)m.straight_walks().size()),
                        comp_i, comp_j);
}

std::vector<int> abs_linking_profile(const PlanarMap& map, const Resolution& res) {
  int nc = (int)map.straight_walks().size();
  Orientation orient = Orientation::canonical(nc);
  std::vector<int> prof;
  for (int i = 0; i < nc; i++)
    for (int j = i + 1; j < nc; j++)
      prof.push_back(std::abs(linking_number(map, res, orient, i, j)));
  std::sort(prof.begin(), prof.end());
  return prof;
}

std::vector<int> abs_linking_profile(const Diagram& d) {
  return abs_linking_profile(d.projection.map(), d.resolution);
}

Resolution mirrored(const Resolution& res) {
  Resolution r = res;
  for (auto& b : r.over_parity) b ^= 1;
  return r;
}

const L6n1Reference& l6n1_reference() {
  static const L6n1Reference ref = [] {
    L6n1Reference r;
    r.diagram = fixtures::l6n1_reference_diagram();
    const auto& m = r.diagram.projection.map();
    if (abs_linking_profile(r.diagram) != std::vector<int>{1, 1, 1})
      fail(Errc::ValidationError, "reference diagram has a wrong linking profile");
    int nc = (int)m.straight_walks().size();
    for (int mirror = 0; mirror < 2; mirror++) {
      Resolution res = mirror ? mirrored(r.diagram.resolution) : r.diagram.resolution;
      for (int bits = 0; bits < (1 << nc); bits++) {
        Orientation orient = Orientation::canonical(nc);
        for (int c = 0; c < nc; c++) orient.reversed[c] = (bits >> c) & 1;
        r.jones_set.insert(jones(m, res, orient));
      }
    }
    return r;
  }();
  return ref;
}

L6n1Verdict is_l6n1(const PlanarMap& map, const Resolution& res, int cap) {
  L6n1Verdict v;
  v.components = (int)map.straight_walks().size();
  if (v.components != 3)
    fail(Errc::WrongComponentCount,
         "diagram has " + std::to_string(v.components) + " components, need 3");
  if (map.vertex_count() > effective_cap(cap))
    fail(Errc::TooManyCrossings, "diagram exceeds the crossing cap");
  v.abs_lk = abs_linking_profile(map, res);
  v.profile_ok = v.abs_lk == std::vector<int>{1, 1, 1};
  if (!v.profile_ok) {
    v.reason = "pairwise linking profile is not (1,1,1)";
    return v;
  }
  v.jones_value = jones(map, res, Orientation::canonical(3), cap);
  v.jones_ok = l6n1_reference().jones_set.count(v.jones_value) > 0;
  if (!v.jones_ok) {
    v.reason = "Jones polynomial outside the reference set";
    return v;
  }
  v.ok = true;
  return v;
}

L6n1Verdict is_l6n1(const Diagram& d, int cap) {
  return is_l6n1(d.projection.map(), d.resolution, cap);
}

}  // namespace l6n1
