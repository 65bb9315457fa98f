#include "l6n1/planar_map.hpp"

#include <algorithm>
#include <numeric>

namespace l6n1 {

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

PlanarMap PlanarMap::build(int vertex_count, std::vector<std::pair<Dart, Dart>> edges) {
  if (vertex_count <= 0)
    fail(Errc::VertexlessComponent,
         "maps need at least one crossing; crossing-free closed curves are not representable");
  PlanarMap m;
  m.vertex_count_ = vertex_count;
  m.edges_ = std::move(edges);
  m.validate_and_index();
  return m;
}

void PlanarMap::validate_and_index() {
  const int nd = dart_count();
  alpha_.assign(nd, -1);
  edge_of_.assign(nd, -1);
  if ((int)edges_.size() * 2 != nd)
    fail(Errc::NotInvolution, "expected " + std::to_string(nd / 2) + " edges, got " +
                                  std::to_string(edges_.size()));
  for (int e = 0; e < (int)edges_.size(); e++) {
    auto [a, b] = edges_[e];
    if (a < 0 || a >= nd || b < 0 || b >= nd)
      fail(Errc::NotInvolution, "dart out of range in edge " + std::to_string(e));
    if (a == b) fail(Errc::NotInvolution, "dart " + std::to_string(a) + " paired with itself");
    if (alpha_[a] != -1 || alpha_[b] != -1)
      fail(Errc::NotInvolution, "dart appears in more than one edge");
    alpha_[a] = b;
    alpha_[b] = a;
    edge_of_[a] = e;
    edge_of_[b] = e;
  }

  // Faces: orbits of phi = sigma o alpha, keyed by minimum dart.
  face_of_.assign(nd, -1);
  for (Dart d = 0; d < nd; d++) {
    if (face_of_[d] != -1) continue;
    FaceWalk f;
    Dart cur = d;
    do {
      face_of_[cur] = (int)faces_.size();
      f.darts.push_back(cur);
      cur = face_next(cur);
    } while (cur != d);
    faces_.push_back(std::move(f));
  }

  // Connected components and the sphere check, per component.
  Dsu dsu(vertex_count_);
  for (auto& [a, b] : edges_) dsu.unite(dart_vertex(a), dart_vertex(b));
  std::vector<int> comp_v(vertex_count_, 0), comp_e(vertex_count_, 0), comp_f(vertex_count_, 0);
  for (int v = 0; v < vertex_count_; v++) comp_v[dsu.find(v)]++;
  for (auto& [a, b] : edges_) comp_e[dsu.find(dart_vertex(a))]++;
  for (auto& f : faces_) comp_f[dsu.find(dart_vertex(f.darts[0]))]++;
  component_count_ = 0;
  for (int v = 0; v < vertex_count_; v++) {
    if (dsu.find(v) != v) continue;
    component_count_++;
    int chi = comp_v[v] - comp_e[v] + comp_f[v];
    if (chi != 2)
      fail(Errc::NotSpherical, "component has Euler characteristic " + std::to_string(chi));
  }

  // 4-regular maps are bridgeless, so no edge may bound a face twice.
  for (int e = 0; e < (int)edges_.size(); e++)
    if (face_of_[edges_[e].first] == face_of_[edges_[e].second])
      fail(Errc::ValidationError, "edge " + std::to_string(e) + " repeats on one face boundary");

  // Straight-ahead walks: tau-orbits paired with their reverses.
  walk_of_edge_.assign(edges_.size(), -1);
  walk_pos_.assign(nd, -1);
  std::vector<int> orbit_of(nd, -1);
  std::vector<std::vector<Dart>> orbits;
  for (Dart d = 0; d < nd; d++) {
    if (orbit_of[d] != -1) continue;
    std::vector<Dart> orb;
    Dart cur = d;
    do {
      orbit_of[cur] = (int)orbits.size();
      orb.push_back(cur);
      cur = walk_next(cur);
    } while (cur != d);
    orbits.push_back(std::move(orb));
  }
  std::vector<bool> used(orbits.size(), false);
  for (int i = 0; i < (int)orbits.size(); i++) {
    if (used[i]) continue;
    used[i] = true;
    int rev = orbit_of[alpha_[orbits[i][0]]];
    used[rev] = true;
    // The forward direction starts at the overall minimum dart, which is
    // orbits[i][0] unless the reverse orbit owns a smaller dart.
    const std::vector<Dart>& fwd =
        (rev != i && orbits[rev][0] < orbits[i][0]) ? orbits[rev] : orbits[i];
    StraightWalk w;
    w.darts = fwd;
    for (Dart d : fwd) {
      w.edges.push_back(edge_of_[d]);
      walk_of_edge_[edge_of_[d]] = (int)walks_.size();
    }
    for (int k = 0; k < (int)fwd.size(); k++) walk_pos_[fwd[k]] = k;
    walks_.push_back(std::move(w));
  }
  std::sort(walks_.begin(), walks_.end(),
            [](const StraightWalk& a, const StraightWalk& b) { return a.darts[0] < b.darts[0]; });
  for (int i = 0; i < (int)walks_.size(); i++)
    for (int e : walks_[i].edges) walk_of_edge_[e] = i;
}

bool PlanarMap::face_is_cycle(int face) const {
  const auto& f = faces_[face];
  std::vector<int> vs;
  for (Dart d : f.darts) vs.push_back(dart_vertex(d));
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

std::vector<std::int32_t> PlanarMap::seeded_code(Dart start, bool reflected,
                                                 const std::vector<int>& edge_key,
                                                 std::vector<Dart>* relabel) const {
  std::vector<Dart> to_new(dart_count(), -1);
  std::vector<Dart> to_old;
  to_old.reserve(dart_count());
  int next_vertex = 0;
  auto assign = [&](Dart od) {
    int s0 = dart_slot(od);
    int v = dart_vertex(od);
    for (int j = 0; j < 4; j++) {
      int os = reflected ? ((s0 - j) & 3) : ((s0 + j) & 3);
      Dart odart = make_dart(v, os);
      to_new[odart] = make_dart(next_vertex, j);
      to_old.push_back(odart);
    }
    next_vertex++;
  };
  assign(start);
  std::vector<std::int32_t> code;
  for (int k = 0; k < next_vertex; k++) {
    for (int j = 0; j < 4; j++) {
      Dart od = to_old[4 * k + j];
      Dart partner = alpha_[od];
      if (to_new[partner] < 0) assign(partner);
      code.push_back(to_new[partner]);
      if (!edge_key.empty()) code.push_back(edge_key[edge_of_[od]]);
    }
  }
  if (relabel) *relabel = std::move(to_new);
  return code;
}

namespace {

// Component-wise canonical data with enough bookkeeping to rebuild witnesses.
struct CanonInternal {
  std::vector<std::int32_t> code;
  std::vector<Dart> relabel;  // old dart -> canonical dart (over the whole map)
};

// Streaming seed evaluation: generates the seeded code entry by entry and
// keeps the running minimum, aborting a seed as soon as it compares worse.
struct SeedSearch {
  const PlanarMap& m;
  const std::vector<int>& edge_key;
  std::vector<Dart> to_new, to_old;
  std::vector<std::int32_t> cand;

  explicit SeedSearch(const PlanarMap& pm, const std::vector<int>& key)
      : m(pm), edge_key(key), to_new(pm.dart_count(), -1) {
    to_old.reserve(pm.dart_count());
    cand.reserve(2 * pm.dart_count());
  }

  // Returns true when the seed produced a code strictly smaller than best
  // (or best was empty), leaving it in `cand`.
  bool run(Dart start, bool reflected, const std::vector<std::int32_t>& best) {
    for (Dart d : to_old) to_new[d] = -1;
    to_old.clear();
    cand.clear();
    int next_vertex = 0;
    auto assign = [&](Dart od) {
      int s0 = dart_slot(od);
      int v = dart_vertex(od);
      for (int j = 0; j < 4; j++) {
        int os = reflected ? ((s0 - j) & 3) : ((s0 + j) & 3);
        Dart odart = make_dart(v, os);
        to_new[odart] = make_dart(next_vertex, j);
        to_old.push_back(odart);
      }
      next_vertex++;
    };
    assign(start);
    bool winning = best.empty();
    std::size_t pos = 0;
    auto feed = [&](std::int32_t value) {
      if (!winning) {
        if (value > best[pos]) return false;
        if (value < best[pos]) {
          cand.assign(best.begin(), best.begin() + pos);
          winning = true;
        }
      }
      if (winning) cand.push_back(value);
      pos++;
      return true;
    };
    for (int k = 0; k < next_vertex; k++) {
      for (int j = 0; j < 4; j++) {
        Dart od = to_old[4 * k + j];
        Dart partner = m.alpha(od);
        if (to_new[partner] < 0) assign(partner);
        if (!feed(to_new[partner])) return false;
        if (!edge_key.empty() && !feed(edge_key[m.edge_of(od)])) return false;
      }
    }
    return winning;
  }
};

CanonInternal canonical_internal(const PlanarMap& m, const CanonicalOptions& opts,
                                 const std::vector<int>& edge_key) {
  const int nd = m.dart_count();
  // Group darts by connected component.
  std::vector<int> comp(nd, -1);
  std::vector<std::vector<Dart>> comp_darts;
  for (Dart d = 0; d < nd; d++) {
    if (comp[d] != -1) continue;
    std::vector<Dart> stack{d}, mine;
    comp[d] = (int)comp_darts.size();
    while (!stack.empty()) {
      Dart x = stack.back();
      stack.pop_back();
      mine.push_back(x);
      for (Dart y : {m.alpha(x), rot_next(x)})
        if (comp[y] == -1) {
          comp[y] = comp[d];
          stack.push_back(y);
        }
    }
    comp_darts.push_back(std::move(mine));
  }

  struct CompBest {
    std::vector<std::int32_t> code;
    Dart seed = -1;
    bool reflected = false;
  };

  SeedSearch search(m, edge_key);
  CanonInternal best;
  bool have_best = false;
  int orientations = opts.allow_reflection ? 2 : 1;
  std::vector<CompBest> per_comp(comp_darts.size());
  for (int o = 0; o < orientations; o++) {
    bool refl = o == 1;
    for (auto& cb : per_comp) {
      cb.code.clear();
      cb.seed = -1;
    }
    for (int c = 0; c < (int)comp_darts.size(); c++) {
      for (Dart seed : comp_darts[c]) {
        if (search.run(seed, refl, per_comp[c].code)) {
          per_comp[c].code = search.cand;
          per_comp[c].seed = seed;
          per_comp[c].reflected = refl;
        }
      }
    }
    std::vector<int> order(comp_darts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return per_comp[a].code < per_comp[b].code; });
    std::vector<std::int32_t> full;
    for (int idx : order) {
      full.push_back(-1);
      full.insert(full.end(), per_comp[idx].code.begin(), per_comp[idx].code.end());
    }
    if (!have_best || full < best.code) {
      have_best = true;
      best.code = std::move(full);
      best.relabel.assign(nd, -1);
      int vertex_offset = 0;
      for (int idx : order) {
        std::vector<Dart> rel;
        m.seeded_code(per_comp[idx].seed, refl, edge_key, &rel);
        for (Dart d : comp_darts[idx]) best.relabel[d] = rel[d] + 4 * vertex_offset;
        vertex_offset += (int)comp_darts[idx].size() / 4;
      }
    }
  }
  return best;
}

}  // namespace

std::vector<std::int32_t> PlanarMap::canonical_form(const CanonicalOptions& opts,
                                                    const std::vector<int>& edge_key) const {
  return canonical_internal(*this, opts, edge_key).code;
}

std::string PlanarMap::canonical_string(const CanonicalOptions& opts,
                                        const std::vector<int>& edge_key) const {
  auto code = canonical_form(opts, edge_key);
  std::string s;
  s.reserve(code.size() * 3);
  for (auto v : code) {
    s.push_back(char('0' + ((v + 1) & 0x3f)));
    s.push_back(char('0' + (((v + 1) >> 6) & 0x3f)));
    s.push_back(char('0' + (((v + 1) >> 12) & 0x3f)));
  }
  return s;
}

IsoResult are_isomorphic(const PlanarMap& a, const PlanarMap& b, bool allow_reflection) {
  IsoResult r;
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return r;
  CanonicalOptions opts{allow_reflection};

  // The canonical code is orientation-minimal; to recover whether the witness
  // reflects, redo each side per orientation and match.
  auto ca = canonical_internal(a, opts, {});
  auto cb = canonical_internal(b, opts, {});
  if (ca.code != cb.code) return r;

  r.isomorphic = true;
  r.dart_map.assign(a.dart_count(), -1);
  std::vector<Dart> inv_b(b.dart_count(), -1);
  for (Dart d = 0; d < b.dart_count(); d++) inv_b[cb.relabel[d]] = d;
  for (Dart d = 0; d < a.dart_count(); d++) r.dart_map[d] = inv_b[ca.relabel[d]];
  r.vertex_map.assign(a.vertex_count(), -1);
  for (int v = 0; v < a.vertex_count(); v++) r.vertex_map[v] = dart_vertex(r.dart_map[4 * v]);
  // A relabelling is a reflection when it reverses some rotation.
  Dart d0 = 0;
  Dart image_next = r.dart_map[rot_next(d0)];
  r.reflected = image_next != rot_next(r.dart_map[d0]);
  return r;
}

}  // namespace l6n1
