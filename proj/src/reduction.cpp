#include "l6n1/reduction.hpp"

#include <algorithm>
#include <sstream>

#include "l6n1/fixtures.hpp"

namespace l6n1 {

namespace {

struct Rebuilt {
  Projection proj;
  std::vector<int> vertex_map;
  int new_vertex_count = 0;
};

// Rebuild after deleting vertices. `traverse(d)` is where a strand entering
// the edge at dart d emerges (alpha plus operation overrides), `through(d)`
// continues a strand across a removed vertex arrived at via d, and
// `constituent(d)` is the edge id charged for the step (merged edges inherit
// the smallest id).
Rebuilt rebuild(const Projection& p, const std::vector<bool>& removed,
                const std::function<Dart(Dart)>& traverse,
                const std::function<Dart(Dart)>& through,
                const std::function<int(Dart)>& constituent) {
  const auto& m = p.map();
  Rebuilt out;
  out.vertex_map.assign(m.vertex_count(), -1);
  for (int v = 0; v < m.vertex_count(); v++)
    if (!removed[v]) out.vertex_map[v] = out.new_vertex_count++;
  if (out.new_vertex_count == 0) fail(Errc::ValidationError, "operation removed every vertex");

  auto renamed = [&](Dart d) { return make_dart(out.vertex_map[dart_vertex(d)], dart_slot(d)); };

  struct NewEdge {
    Dart a, b;
    int inherited;
    Colour colour;
  };
  std::vector<NewEdge> coll;
  std::vector<bool> done(m.dart_count(), false);
  const int step_limit = 4 * m.dart_count() + 8;
  for (Dart d = 0; d < m.dart_count(); d++) {
    if (removed[dart_vertex(d)] || done[d]) continue;
    int inherited = constituent(d);
    Dart x = traverse(d);
    int guard = 0;
    while (removed[dart_vertex(x)]) {
      Dart cont = through(x);
      inherited = std::min(inherited, constituent(cont));
      x = traverse(cont);
      if (++guard > step_limit)
        fail(Errc::ValidationError, "strand never re-enters the surviving diagram");
    }
    done[d] = done[x] = true;
    coll.push_back({renamed(d), renamed(x), inherited, p.colour_of_edge(m.edge_of(d))});
  }
  std::sort(coll.begin(), coll.end(), [](const NewEdge& a, const NewEdge& b) {
    return std::pair(a.inherited, std::min(a.a, a.b)) < std::pair(b.inherited, std::min(b.a, b.b));
  });
  std::vector<std::pair<Dart, Dart>> edges;
  std::vector<Colour> colours;
  for (auto& e : coll) {
    edges.push_back({e.a, e.b});
    colours.push_back(e.colour);
  }
  out.proj = Projection::make(PlanarMap::build(out.new_vertex_count, std::move(edges)),
                              std::move(colours));
  return out;
}

bool same_move(const ShortcutMove& a, const ShortcutMove& b) {
  return a.face == b.face && a.edge_e == b.edge_e && a.edge_e2 == b.edge_e2 &&
         a.kept == b.kept && a.discarded == b.discarded;
}

bool same_move(const ThetaMove& a, const ThetaMove& b) {
  return a.u == b.u && a.v == b.v && a.w == b.w && a.edge_e == b.edge_e && a.cycle == b.cycle;
}

}  // namespace

std::pair<Projection, TraceStep> apply_shortcut(const Projection& p, const ShortcutMove& m) {
  bool live = false;
  for (const auto& cand : p.find_shortcuts())
    if (same_move(cand, m)) live = true;
  if (!live) fail(Errc::MoveStale, "shortcut move does not apply to this projection");

  const auto& map = p.map();
  std::vector<bool> removed(map.vertex_count(), false);
  ShortcutStep step;
  step.face = m.face;
  step.edge_e = m.edge_e;
  step.edge_e2 = m.edge_e2;
  step.colour = m.colour;
  step.discarded = m.discarded;
  for (std::size_t k = 1; k < m.discarded.size(); k++) {
    int v = dart_vertex(m.discarded[k]);
    removed[v] = true;
    step.occurrences.push_back({v, dart_slot(m.discarded[k]) & 1});
  }

  // Stubs of the rerouted colour walk: the surviving side of the first cut
  // edge, and of the second.
  Dart stub1 = m.discarded.front();
  Dart stub2 = map.alpha(m.discarded.back());
  int composite = std::min(m.edge_e, m.edge_e2);
  auto traverse = [&](Dart d) -> Dart {
    if (d == stub1) return stub2;
    if (d == stub2) return stub1;
    return map.alpha(d);
  };
  auto through = [&](Dart d) -> Dart { return opposite(d); };
  auto constituent = [&](Dart d) -> int {
    if (d == stub1 || d == stub2) return composite;
    return map.edge_of(d);
  };

  Rebuilt rb = rebuild(p, removed, traverse, through, constituent);
  if (rb.proj.map().vertex_count() >= map.vertex_count())
    fail(Errc::ValidationError, "shortcut failed to remove any vertex");
  step.vertex_map = rb.vertex_map;
  step.post_vertex_count = rb.proj.map().vertex_count();
  return {std::move(rb.proj), TraceStep(std::move(step))};
}

namespace detail {

Projection apply_theta_smoothing(const Projection& p, const ThetaMove& m, int smoothing,
                                 std::vector<int>* vertex_map) {
  const auto& map = p.map();
  std::vector<bool> removed(map.vertex_count(), false);
  removed[m.u] = true;
  auto glue = [&](Dart d) -> Dart {
    int s = dart_slot(d);
    return make_dart(m.u, smoothing == 0 ? (s ^ 1) : (3 - s));
  };
  auto traverse = [&](Dart d) -> Dart { return map.alpha(d); };
  auto constituent = [&](Dart d) -> int { return map.edge_of(d); };
  Rebuilt rb = rebuild(p, removed, traverse, glue, constituent);
  if (vertex_map) *vertex_map = rb.vertex_map;
  return std::move(rb.proj);
}

}  // namespace detail

std::pair<Projection, TraceStep> apply_theta_split(const Projection& p, const ThetaMove& m) {
  bool live = false;
  for (const auto& cand : p.find_thetas())
    if (same_move(cand, m)) live = true;
  if (!live) fail(Errc::MoveStale, "theta move does not apply to this projection");

  ThetaStep step;
  step.u = m.u;
  step.v = m.v;
  step.w = m.w;
  step.edge_e = m.edge_e;
  step.parity_cycle_at_v = dart_slot(m.cycle[1]) & 1;
  step.parity_cycle_at_w = dart_slot(m.cycle[2]) & 1;
  step.parity_entering_at_u = dart_slot(m.loop_out) & 1;

  Projection result;
  std::vector<int> vmap;
  int chosen = -1;
  for (int s = 0; s < 2 && chosen < 0; s++) {
    try {
      result = detail::apply_theta_smoothing(p, m, s, &vmap);
      chosen = s;
    } catch (const Error& e) {
      if (e.code() != Errc::ColourClassNotOneWalk && e.code() != Errc::NotSpherical) throw;
    }
  }
  if (chosen < 0)
    fail(Errc::NoValidSmoothing, "neither planar smoothing keeps the walk closed");
  // The complementary smoothing must split the walk; both working would break
  // the lift bookkeeping.
  try {
    detail::apply_theta_smoothing(p, m, 1 - chosen, nullptr);
    fail(Errc::NoValidSmoothing, "both smoothings keep the walk closed");
  } catch (const Error& e) {
    if (e.code() == Errc::NoValidSmoothing) throw;
    if (e.code() != Errc::ColourClassNotOneWalk && e.code() != Errc::NotSpherical) throw;
  }
  if (result.map().vertex_count() != p.map().vertex_count() - 1)
    fail(Errc::ValidationError, "theta split must remove exactly one vertex");
  step.smoothing = chosen;
  step.vertex_map = vmap;
  step.post_vertex_count = result.map().vertex_count();
  return {std::move(result), TraceStep(std::move(step))};
}

bool is_irreducible(const Projection& p) {
  if (!p.is_pairwise_crossing()) return false;
  return p.find_shortcuts().empty() && p.find_thetas().empty();
}

ReduceResult reduce_with_policy(const Projection& p,
                                const std::function<std::size_t(std::size_t)>& pick) {
  if (!p.is_pairwise_crossing())
    fail(Errc::NotPairwiseCrossing, "reduce needs a pairwise crossing projection");
  ReduceResult out;
  out.stages.push_back(p);
  Projection cur = p;
  for (;;) {
    auto shortcuts = cur.find_shortcuts();
    auto thetas = cur.find_thetas();
    std::size_t total = shortcuts.size() + thetas.size();
    if (total == 0) break;
    std::size_t k = pick(total);
    if (k >= total) fail(Errc::ValidationError, "move picker out of range");
    std::pair<Projection, TraceStep> applied =
        k < shortcuts.size() ? apply_shortcut(cur, shortcuts[k])
                             : apply_theta_split(cur, thetas[k - shortcuts.size()]);
    cur = std::move(applied.first);
    out.trace.steps.push_back(std::move(applied.second));
    out.stages.push_back(cur);
  }
  out.reduced = std::move(cur);
  return out;
}

ReduceResult reduce(const Projection& p) {
  return reduce_with_policy(p, [](std::size_t) { return std::size_t(0); });
}

ClassifiedIrreducible classify_irreducible(const Projection& p) {
  if (!is_irreducible(p)) fail(Errc::NotIrreducible, "projection admits a reduction");
  auto digons = [](const Projection& q) {
    int n = 0;
    for (const auto& f : q.map().faces())
      if (f.degree() == 2) n++;
    return n;
  };
  IsoResult iso = are_isomorphic(fixtures::p1().map(), p.map(), true);
  if (iso.isomorphic) {
    if (digons(p) != 0)
      fail(Errc::UnknownIrreducible, "matched the triangle class but carries digon faces");
    return {IrreducibleClass::Krupp, std::move(iso)};
  }
  iso = are_isomorphic(fixtures::p2().map(), p.map(), true);
  if (iso.isomorphic) {
    if (digons(p) != 3)
      fail(Errc::UnknownIrreducible, "matched the chain class but lacks its three digons");
    return {IrreducibleClass::NonKrupp, std::move(iso)};
  }
  fail(Errc::UnknownIrreducible, "irreducible projection matches neither reference");
}

std::string serialize_trace(const ReductionTrace& t) {
  std::ostringstream os;
  for (const auto& step : t.steps) {
    if (std::holds_alternative<ShortcutStep>(step)) {
      const auto& s = std::get<ShortcutStep>(step);
      os << "SC face=" << s.face << " e=" << s.edge_e << " e'=" << s.edge_e2 << " discarded=";
      for (std::size_t i = 0; i < s.discarded.size(); i++) {
        if (i) os << ",";
        os << s.discarded[i];
      }
      os << "\n";
    } else {
      const auto& s = std::get<ThetaStep>(step);
      os << "TH u=" << s.u << " v=" << s.v << " w=" << s.w << " e=" << s.edge_e
         << " smooth=" << s.smoothing << "\n";
    }
  }
  return os.str();
}

namespace {

long field(const std::string& line, const std::string& key, int lineno) {
  std::istringstream ls(line);
  std::string tok;
  while (ls >> tok) {
    if (tok.rfind(key + "=", 0) != 0) continue;
    try {
      return std::stol(tok.substr(key.size() + 1));
    } catch (...) {
      fail_at(lineno, "bad integer in field " + key);
    }
  }
  fail_at(lineno, "missing field " + key);
}

}  // namespace

ReductionTrace replay_trace(const Projection& initial, const std::string& text) {
  ReductionTrace out;
  Projection cur = initial;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    lineno++;
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("SC ", 0) == 0) {
      int face = (int)field(line, "face", lineno);
      int e = (int)field(line, "e", lineno);
      int e2 = (int)field(line, "e'", lineno);
      auto dpos = line.find("discarded=");
      if (dpos == std::string::npos) fail_at(lineno, "missing field discarded");
      std::vector<Dart> darts;
      std::istringstream ds(line.substr(dpos + 10));
      std::string tok;
      while (std::getline(ds, tok, ',')) darts.push_back((Dart)std::stol(tok));
      const ShortcutMove* found = nullptr;
      auto moves = cur.find_shortcuts();
      for (const auto& mv : moves)
        if (mv.face == face && mv.edge_e == e && mv.edge_e2 == e2 && mv.discarded == darts)
          found = &mv;
      if (!found) fail(Errc::StepMismatch, "no applicable shortcut matches line " +
                                               std::to_string(lineno));
      auto applied = apply_shortcut(cur, *found);
      cur = std::move(applied.first);
      out.steps.push_back(std::move(applied.second));
    } else if (line.rfind("TH ", 0) == 0) {
      int u = (int)field(line, "u", lineno);
      int v = (int)field(line, "v", lineno);
      int w = (int)field(line, "w", lineno);
      int e = (int)field(line, "e", lineno);
      int smooth = (int)field(line, "smooth", lineno);
      const ThetaMove* found = nullptr;
      auto moves = cur.find_thetas();
      for (const auto& mv : moves)
        if (mv.u == u && mv.v == v && mv.w == w && mv.edge_e == e) found = &mv;
      if (!found)
        fail(Errc::StepMismatch, "no applicable theta matches line " + std::to_string(lineno));
      auto applied = apply_theta_split(cur, *found);
      if (std::get<ThetaStep>(applied.second).smoothing != smooth)
        fail(Errc::StepMismatch, "recorded smoothing differs at line " + std::to_string(lineno));
      cur = std::move(applied.first);
      out.steps.push_back(std::move(applied.second));
    } else {
      fail_at(lineno, "unknown trace line");
    }
  }
  return out;
}

}  // namespace l6n1
