#include "l6n1/generator.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "l6n1/fixtures.hpp"

namespace l6n1 {

namespace detail {

Projection bump(const Projection& p, int face, Dart a_dart, Dart b_dart) {
  const auto& m = p.map();
  if (m.face_of(a_dart) != face || m.face_of(b_dart) != face)
    fail(Errc::ValidationError, "bump darts must lie on the chosen face");
  int a = m.edge_of(a_dart), b = m.edge_of(b_dart);
  if (a == b) fail(Errc::ValidationError, "bump needs two distinct edges");

  int V = m.vertex_count();
  Dart z1 = make_dart(V, 0), z2 = make_dart(V + 1, 0);
  // z1 slots: 0 toward z2 along b, 1 the u-turn, 2 toward b's tail, 3 the
  // descent into the face; z2 mirrors it further along b. Which end of the
  // rerouted edge lands on which crossing depends on how the two boundary
  // stretches face each other, so both pairings are tried and the sphere
  // check keeps the drawable one.
  Colour ca = p.colour_of_edge(a), cb = p.colour_of_edge(b);
  auto assemble = [&](bool swap_descents) {
    std::vector<std::pair<Dart, Dart>> edges;
    std::vector<Colour> colours;
    for (int e = 0; e < m.edge_count(); e++) {
      if (e == a || e == b) continue;
      edges.push_back(m.edges()[e]);
      colours.push_back(p.colour_of_edge(e));
    }
    Dart first = swap_descents ? z2 : z1, second = swap_descents ? z1 : z2;
    edges.push_back({a_dart, first + 3});
    colours.push_back(ca);
    edges.push_back({z1 + 1, z2 + 1});
    colours.push_back(ca);
    edges.push_back({second + 3, m.alpha(a_dart)});
    colours.push_back(ca);
    edges.push_back({b_dart, z1 + 2});
    colours.push_back(cb);
    edges.push_back({z1 + 0, z2 + 2});
    colours.push_back(cb);
    edges.push_back({z2 + 0, m.alpha(b_dart)});
    colours.push_back(cb);
    return Projection::make(PlanarMap::build(V + 2, std::move(edges)), std::move(colours));
  };

  for (bool swap_descents : {false, true}) {
    try {
      return assemble(swap_descents);
    } catch (const Error& e) {
      if (e.code() != Errc::NotSpherical) throw;
    }
  }
  fail(Errc::ValidationError, "no bump pairing embeds");
}

std::vector<std::pair<int, int>> graft_sites(const Projection& p) {
  std::vector<std::pair<int, int>> sites;
  const auto& m = p.map();
  for (int f = 0; f < m.face_count(); f++) {
    const auto& darts = m.faces()[f].darts;
    if (darts.size() != 2) continue;
    if (dart_vertex(darts[0]) == dart_vertex(darts[1])) continue;
    sites.push_back({f, m.edge_of(darts[0])});
    sites.push_back({f, m.edge_of(darts[1])});
  }
  return sites;
}

Projection graft_theta(const Projection& p, int digon_face, int f_edge) {
  const auto& m = p.map();
  const auto& fd = m.faces()[digon_face].darts;
  if (fd.size() != 2) fail(Errc::ValidationError, "graft site must be a digon face");
  if (m.edge_of(fd[0]) != f_edge && m.edge_of(fd[1]) != f_edge)
    fail(Errc::ValidationError, "edge is not on the digon");
  int g_edge = m.edge_of(fd[0]) == f_edge ? m.edge_of(fd[1]) : m.edge_of(fd[0]);
  if (g_edge == f_edge) fail(Errc::ValidationError, "digon edges must differ");

  Colour c = p.colour_of_edge(f_edge);
  auto [da, db] = m.edges()[f_edge];
  Dart wf = m.walk_position(da) >= 0 ? da : db;  // walk leaves w along f toward v
  const StraightWalk& wk = p.walk_of(c);
  int L = wk.length();
  int pos = m.walk_position(wf);
  Dart wd1 = wk.darts[(pos - 1 + L) % L];  // continuation into w
  Dart wd2 = wk.darts[(pos + 1) % L];      // continuation out of v
  int e1 = m.edge_of(wd1), e2 = m.edge_of(wd2);

  int V = m.vertex_count();
  Dart u0 = make_dart(V, 0);

  auto assemble = [&](const std::vector<std::pair<Dart, Dart>>& fresh) {
    std::vector<std::pair<Dart, Dart>> edges;
    std::vector<Colour> colours;
    for (int e = 0; e < m.edge_count(); e++) {
      if (e == e1 || e == e2) continue;
      edges.push_back(m.edges()[e]);
      colours.push_back(p.colour_of_edge(e));
    }
    for (auto& pr : fresh) {
      edges.push_back(pr);
      colours.push_back(c);
    }
    return Projection::make(PlanarMap::build(V + 1, std::move(edges)), std::move(colours));
  };

  std::vector<std::vector<std::pair<Dart, Dart>>> candidates;
  if (e1 != e2) {
    // Crossed rewiring of the two continuation edges beside the digon; the
    // embeddable interleave at the new vertex is found by the sphere check.
    candidates.push_back(
        {{wd1, u0}, {m.alpha(wd1), u0 + 1}, {wd2, u0 + 2}, {m.alpha(wd2), u0 + 3}});
    candidates.push_back(
        {{wd1, u0}, {m.alpha(wd2), u0 + 1}, {wd2, u0 + 2}, {m.alpha(wd1), u0 + 3}});
  } else {
    // The walk closes through one edge: fold it across itself, leaving a
    // one-edge loop on the far passage.
    candidates.push_back({{wd2, u0}, {u0 + 2, u0 + 1}, {u0 + 3, m.alpha(wd1)}});
    candidates.push_back({{wd2, u0}, {u0 + 2, u0 + 3}, {u0 + 1, m.alpha(wd1)}});
  }

  Projection result;
  bool found = false;
  for (auto& cand : candidates) {
    try {
      Projection q = assemble(cand);
      if (found) fail(Errc::ValidationError, "both interleaves embed");
      result = std::move(q);
      found = true;
    } catch (const Error& e) {
      if (e.code() != Errc::NotSpherical) throw;
    }
  }
  if (!found) fail(Errc::ValidationError, "no interleave embeds");

  bool theta_present = false;
  for (const auto& mv : result.find_thetas())
    if (mv.u == V) theta_present = true;
  if (!theta_present) fail(Errc::ValidationError, "graft produced no theta at the new vertex");
  return result;
}

}  // namespace detail

namespace {

struct RollbackDsu {
  std::vector<int> parent, size;
  struct Op {
    int child, root;
  };
  std::vector<Op> log;

  void reset() {
    parent.clear();
    size.clear();
    log.clear();
  }
  void add() {
    parent.push_back((int)parent.size());
    size.push_back(1);
  }
  void shrink(int n) {
    parent.resize(n);
    size.resize(n);
  }
  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[a] > size[b]) std::swap(a, b);
    parent[a] = b;
    size[b] += size[a];
    log.push_back({a, b});
    return true;
  }
  std::size_t mark() const { return log.size(); }
  void rollback(std::size_t mark) {
    while (log.size() > mark) {
      auto [a, b] = log.back();
      log.pop_back();
      parent[a] = a;
      size[b] -= size[a];
    }
  }
};

// Depth-first search over the crossing pairings of three closed curves with
// fixed passage counts. Planarity is pruned with an upper bound on the number
// of faces the partial rotation system can still close.
class CodeDfs {
public:
  using Sink = std::function<void(PlanarMap&&, const std::vector<Colour>&)>;
  CodeDfs(int n, std::array<int, 3> lens, const EnumerationFilter& filter, const Sink& sink)
      : n_(n), filter_(filter), sink_(sink) {
    L_ = 2 * n_;
    comp_.resize(L_);
    nxt_.resize(L_);
    prv_.resize(L_);
    int at = 0;
    for (int ci = 0; ci < 3; ci++) {
      int base = at;
      for (int k = 0; k < lens[ci]; k++) {
        comp_[at] = ci;
        nxt_[at] = (k + 1 == lens[ci]) ? base : at + 1;
        at++;
      }
      unassigned_[ci] = lens[ci];
    }
    for (int s = 0; s < L_; s++) prv_[nxt_[s]] = s;
    partner_.assign(L_, -1);
    in_dart_.assign(L_, -1);
    out_dart_.assign(L_, -1);
    arc_ends_.assign(L_, 0);
    a2_ = L_;
    dsu_.reset();
  }

  void run() { extend(0); }

private:
  struct Undo {
    int s, t;
    int arcs[4];
    std::size_t dsu_mark;
    int open, committed, a2;
  };

  void add_arrow(int from, int to) {
    if (!dsu_.unite(from, to)) committed_++;
    open_--;
  }

  bool assign(int s, int t, int bit, Undo& u) {
    u.s = s;
    u.t = t;
    u.dsu_mark = dsu_.mark();
    u.open = open_;
    u.committed = committed_;
    u.a2 = a2_;

    int c = assigned_++;
    partner_[s] = t;
    partner_[t] = s;
    in_dart_[s] = 4 * c + 0;
    out_dart_[s] = 4 * c + 2;
    in_dart_[t] = bit ? 4 * c + 3 : 4 * c + 1;
    out_dart_[t] = bit ? 4 * c + 1 : 4 * c + 3;
    for (int k = 0; k < 4; k++) dsu_.add();
    open_ += 4;
    mm_[comp_[s]][comp_[t]]++;
    mm_[comp_[t]][comp_[s]] += (comp_[s] != comp_[t]);
    unassigned_[comp_[s]]--;
    unassigned_[comp_[t]]--;

    // Arc endpoints that just became known: tails of arcs s,t and heads of
    // the arcs entering s and t.
    u.arcs[0] = s;
    u.arcs[1] = prv_[s];
    u.arcs[2] = t;
    u.arcs[3] = prv_[t];
    for (int k = 0; k < 4; k++) {
      int arc = u.arcs[k];
      if (++arc_ends_[arc] == 1) {
        a2_--;
      } else {
        Dart tail = out_dart_[arc], head = in_dart_[nxt_[arc]];
        add_arrow(tail, rot_next(head));
        add_arrow(head, rot_next(tail));
      }
    }
    return !pruned();
  }

  void unassign(const Undo& u) {
    for (int k = 0; k < 4; k++) arc_ends_[u.arcs[k]]--;
    dsu_.rollback(u.dsu_mark);
    dsu_.shrink(4 * (assigned_ - 1));
    open_ = u.open;
    committed_ = u.committed;
    a2_ = u.a2;
    int s = u.s, t = u.t;
    mm_[comp_[s]][comp_[t]]--;
    mm_[comp_[t]][comp_[s]] -= (comp_[s] != comp_[t]);
    unassigned_[comp_[s]]++;
    unassigned_[comp_[t]]++;
    partner_[s] = partner_[t] = -1;
    in_dart_[s] = out_dart_[s] = in_dart_[t] = out_dart_[t] = -1;
    assigned_--;
  }

  bool pruned() const {
    // A valid completion needs at least n+2 faces (one sphere component) and
    // can commit at most n+6 (three components).
    if (committed_ > n_ + 6) return true;
    if (committed_ + open_ + 2 * a2_ < n_ + 2) return true;
    for (int i = 0; i < 3; i++)
      for (int j = i + 1; j < 3; j++) {
        if (mm_[i][j] % 2 == 1 && (unassigned_[i] == 0 || unassigned_[j] == 0)) return true;
        if (filter_.pairwise_crossing_only && mm_[i][j] == 0 &&
            (unassigned_[i] == 0 || unassigned_[j] == 0))
          return true;
      }
    return false;
  }

  void extend(int from) {
    if (assigned_ == n_) {
      complete();
      return;
    }
    int s = from;
    while (partner_[s] != -1) s++;
    for (int t = s + 1; t < L_; t++) {
      if (partner_[t] != -1) continue;
      for (int bit = 0; bit < 2; bit++) {
        Undo u;
        if (assign(s, t, bit, u))
          extend(s + 1);
        unassign(u);
      }
    }
  }

  void complete() {
    // Curve components connect exactly when they cross.
    int parent[3] = {0, 1, 2};
    auto find3 = [&](int x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    for (int i = 0; i < 3; i++)
      for (int j = i + 1; j < 3; j++)
        if (mm_[i][j] > 0) parent[find3(i)] = find3(j);
    int C = 0;
    for (int i = 0; i < 3; i++)
      if (find3(i) == i) C++;
    if (committed_ != n_ + 2 * C) return;  // wrong genus somewhere
    if (filter_.connected_only && C != 1) return;
    if (filter_.pairwise_crossing_only)
      for (int i = 0; i < 3; i++)
        for (int j = i + 1; j < 3; j++)
          if (mm_[i][j] == 0) return;

    std::vector<std::pair<Dart, Dart>> edges;
    std::vector<Colour> colours;
    for (int arc = 0; arc < L_; arc++) {
      edges.push_back({out_dart_[arc], in_dart_[nxt_[arc]]});
      colours.push_back((Colour)comp_[arc]);
    }
    sink_(PlanarMap::build(n_, std::move(edges)), colours);
  }

  int n_, L_;
  EnumerationFilter filter_;
  const Sink& sink_;
  std::vector<int> comp_, nxt_, prv_;
  std::vector<int> partner_, in_dart_, out_dart_, arc_ends_;
  int unassigned_[3] = {0, 0, 0};
  int mm_[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  int assigned_ = 0;
  int a2_ = 0;
  int open_ = 0, committed_ = 0;
  RollbackDsu dsu_;
};

}  // namespace

void enumerate_projections(const EnumerationFilter& f,
                           const std::function<void(const Projection&)>& yield) {
  if (f.vertices > f.cap)
    fail(Errc::CapExceeded, "exhaustive enumeration is capped at " + std::to_string(f.cap) +
                                " vertices");
  if (f.vertices < 1) return;
  int n = f.vertices;
  for (int l1 = 1; 3 * l1 <= 2 * n; l1++) {
    for (int l2 = l1; l1 + 2 * l2 <= 2 * n; l2++) {
      int l3 = 2 * n - l1 - l2;
      // Curve lengths are an isomorphism invariant, so duplicates only occur
      // within a split and the dedup set can reset here.
      std::unordered_set<std::string> seen;
      CodeDfs::Sink sink = [&](PlanarMap&& m, const std::vector<Colour>& cols) {
        std::string key = m.canonical_string(CanonicalOptions{true});
        if (seen.insert(std::move(key)).second)
          yield(Projection::make(std::move(m), cols));
      };
      CodeDfs dfs(n, {l1, l2, l3}, f, sink);
      dfs.run();
    }
  }
}

std::vector<Projection> enumerate_projections(const EnumerationFilter& f) {
  std::vector<Projection> out;
  enumerate_projections(f, [&](const Projection& p) { out.push_back(p); });
  return out;
}

Projection random_projection(int n, std::uint64_t seed) {
  if (n < 6) fail(Errc::Infeasible, "pairwise crossing projections need at least 6 crossings");
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  auto pick = [&](std::size_t count) { return (std::size_t)(rng() % count); };

  bool odd = (n - 6) % 2 != 0;
  Projection cur = odd ? fixtures::p2() : (rng() % 2 ? fixtures::p1() : fixtures::p2());
  while (cur.map().vertex_count() < n) {
    int delta = n - cur.map().vertex_count();
    struct Choice {
      int kind;  // 0 bump, 1 graft
      int face;
      Dart a = -1, b = -1;
      int f_edge = -1;
    };
    std::vector<Choice> choices;
    if (delta >= 1)
      for (auto [face, fe] : detail::graft_sites(cur)) choices.push_back({1, face, -1, -1, fe});
    if (delta >= 2) {
      const auto& m = cur.map();
      for (int f = 0; f < m.face_count(); f++) {
        const auto& darts = m.faces()[f].darts;
        for (Dart d1 : darts)
          for (Dart d2 : darts)
            if (d1 != d2 && m.edge_of(d1) != m.edge_of(d2))
              choices.push_back({0, f, d1, d2, -1});
      }
    }
    if (choices.empty()) fail(Errc::Infeasible, "no applicable inverse move");
    const Choice& c = choices[pick(choices.size())];
    cur = c.kind ? detail::graft_theta(cur, c.face, c.f_edge)
                 : detail::bump(cur, c.face, c.a, c.b);
  }
  return cur;
}

}  // namespace l6n1
