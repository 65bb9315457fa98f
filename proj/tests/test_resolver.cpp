#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "l6n1/fixtures.hpp"
#include "l6n1/generator.hpp"
#include "l6n1/link_invariants.hpp"
#include "l6n1/resolver.hpp"

using namespace l6n1;

namespace {

int encode(const Resolution& res) {
  int bits = 0;
  for (std::size_t v = 0; v < res.over_parity.size(); v++)
    bits |= res.over_parity[v] << (res.over_parity.size() - 1 - v);
  return bits;
}

Resolution decode(int bits, int n) {
  Resolution res{std::vector<std::uint8_t>(n, 0)};
  for (int v = 0; v < n; v++) res.over_parity[v] = (bits >> (n - 1 - v)) & 1;
  return res;
}

// All 64 resolutions of a 6-vertex projection that verify as L6n1, in
// lexicographic vertex-bit order.
std::vector<int> realizing_resolutions(const Projection& p) {
  std::vector<int> out;
  for (int bits = 0; bits < 64; bits++)
    if (is_l6n1(p.map(), decode(bits, 6)).ok) out.push_back(bits);
  return out;
}

bool step_preserves_link(const Diagram& pre, const Diagram& post) {
  return abs_linking_profile(pre) == abs_linking_profile(post) &&
         jones_all_orientations(pre.projection.map(), pre.resolution) ==
             jones_all_orientations(post.projection.map(), post.resolution);
}

}  // namespace

TEST_CASE("base resolutions are the least realizers, counts pinned") {
  auto krupp = realizing_resolutions(fixtures::p1());
  auto nonkrupp = realizing_resolutions(fixtures::p2());
  REQUIRE_FALSE(krupp.empty());
  REQUIRE_FALSE(nonkrupp.empty());

  std::ostringstream report;
  report << "krupp count=" << krupp.size() << " least=" << krupp.front()
         << " | nonkrupp count=" << nonkrupp.size() << " least=" << nonkrupp.front();
  INFO(report.str());

  // Out of the 64 resolutions of each irreducible, these many realize the
  // link; regression constants from this very search.
  CHECK(krupp.size() == 8);
  CHECK(nonkrupp.size() == 6);

  Resolution pinned_k{std::vector<std::uint8_t>(base_bits(IrreducibleClass::Krupp).begin(),
                                                base_bits(IrreducibleClass::Krupp).end())};
  Resolution pinned_n{std::vector<std::uint8_t>(base_bits(IrreducibleClass::NonKrupp).begin(),
                                                base_bits(IrreducibleClass::NonKrupp).end())};
  CHECK(encode(pinned_k) == krupp.front());
  CHECK(encode(pinned_n) == nonkrupp.front());
}

TEST_CASE("base resolution transports through the classification witness") {
  // Relabelled copy of p2: classification finds a witness; the transported
  // resolution must still verify.
  const Projection& p2 = fixtures::p2();
  std::vector<int> perm = {4, 2, 5, 0, 3, 1};
  std::vector<std::pair<Dart, Dart>> edges;
  for (auto [a, b] : p2.map().edges())
    edges.push_back({make_dart(perm[dart_vertex(a)], dart_slot(a)),
                     make_dart(perm[dart_vertex(b)], dart_slot(b))});
  Projection q = Projection::make(PlanarMap::build(6, std::move(edges)), p2.edge_colours());
  auto cls = classify_irreducible(q);
  CHECK(cls.cls == IrreducibleClass::NonKrupp);
  Resolution res = base_resolution(q, cls);
  CHECK(is_l6n1(q.map(), res).ok);
}

TEST_CASE("theta lift table is pinned by the invariant-preservation search") {
  // Family: every theta over every digon graft of the chain irreducible (all
  // 7-vertex theta hosts arise this way).
  std::mt19937 rng(4242);
  std::set<int> passing[2][2];
  bool first = true;

  const Projection p2 = fixtures::p2();
  for (auto [face, f_edge] : detail::graft_sites(p2)) {
    Projection host = detail::graft_theta(p2, face, f_edge);
    for (const auto& mv : host.find_thetas()) {
      auto [post, step] = apply_theta_split(host, mv);
      const auto& ts = std::get<ThetaStep>(step);
      int pv = ts.vertex_map[ts.v], pw = ts.vertex_map[ts.w];
      REQUIRE(pv >= 0);
      REQUIRE(pw >= 0);
      for (int background = 0; background < 3; background++) {
        Resolution base{std::vector<std::uint8_t>(post.map().vertex_count(), 0)};
        if (background == 1)
          for (auto& b : base.over_parity) b = 1;
        if (background == 2)
          for (auto& b : base.over_parity) b = rng() & 1;
        for (int fv = 0; fv < 2; fv++) {
          for (int fw = 0; fw < 2; fw++) {
            Resolution postres = base;
            postres.over_parity[pv] = fv ? ts.parity_cycle_at_v : 1 - ts.parity_cycle_at_v;
            postres.over_parity[pw] = fw ? ts.parity_cycle_at_w : 1 - ts.parity_cycle_at_w;
            Diagram post_d{post, postres};
            std::set<int> local;
            for (int triple = 0; triple < 8; triple++) {
              Resolution pre{std::vector<std::uint8_t>(host.map().vertex_count(), 0)};
              for (int v = 0; v < host.map().vertex_count(); v++)
                if (ts.vertex_map[v] >= 0)
                  pre.over_parity[v] = postres.over_parity[ts.vertex_map[v]];
              int fu2 = (triple >> 2) & 1, fv2 = (triple >> 1) & 1, fw2 = triple & 1;
              pre.over_parity[ts.u] =
                  fu2 ? ts.parity_entering_at_u : 1 - ts.parity_entering_at_u;
              pre.over_parity[ts.v] = fv2 ? ts.parity_cycle_at_v : 1 - ts.parity_cycle_at_v;
              pre.over_parity[ts.w] = fw2 ? ts.parity_cycle_at_w : 1 - ts.parity_cycle_at_w;
              if (step_preserves_link(Diagram{host, pre}, post_d)) local.insert(triple);
            }
            if (first)
              passing[fv][fw] = local;
            else {
              std::set<int> inter;
              for (int t : passing[fv][fw])
                if (local.count(t)) inter.insert(t);
              passing[fv][fw] = inter;
            }
          }
        }
        first = false;
      }
    }
  }

  std::ostringstream report;
  for (int fv = 0; fv < 2; fv++)
    for (int fw = 0; fw < 2; fw++) {
      report << "case(" << fv << "," << fw << "):";
      for (int t : passing[fv][fw]) report << " " << t;
      report << " | ";
    }
  INFO(report.str());

  const auto& table = theta_lift_table();
  for (int fv = 0; fv < 2; fv++)
    for (int fw = 0; fw < 2; fw++) {
      REQUIRE_FALSE(passing[fv][fw].empty());
      const auto& e = table[fv][fw];
      int pinned = (e.u << 2) | (e.v << 1) | e.w;
      CHECK(pinned == *passing[fv][fw].begin());
    }
}

TEST_CASE("resolving an irreducible is its base resolution") {
  const Projection& p1 = fixtures::p1();
  Diagram d = resolve_l6n1(p1);
  auto cls = classify_irreducible(p1);
  CHECK(d.resolution == base_resolution(p1, cls));
  CHECK(is_l6n1(d).ok);
}

TEST_CASE("theta fixture resolves to a seven-crossing realization") {
  Diagram d = resolve_l6n1(fixtures::theta_fixture());
  CHECK(d.projection.map().vertex_count() == 7);
  CHECK(is_l6n1(d).ok);
}

TEST_CASE("shortcut lifts put the discarded strand on top") {
  for (const Projection& p :
       {fixtures::mono_digon_fixture(), fixtures::cut_vertex_fixture(), random_projection(10, 3)}) {
    auto h = resolve_l6n1_with_history(p);
    for (std::size_t k = 0; k < h.reduction.trace.steps.size(); k++) {
      if (!std::holds_alternative<ShortcutStep>(h.reduction.trace.steps[k])) continue;
      const auto& s = std::get<ShortcutStep>(h.reduction.trace.steps[k]);
      const Resolution& pre = h.diagrams[k].resolution;
      std::vector<bool> first_seen(pre.over_parity.size(), false);
      for (auto [v, parity] : s.occurrences) {
        if (first_seen[v]) continue;
        first_seen[v] = true;
        CHECK((int)pre.over_parity[v] == parity);
      }
    }
  }
}

TEST_CASE("every lift step preserves the link invariants on the fixtures") {
  for (const Projection& p :
       {fixtures::theta_fixture(), fixtures::cut_vertex_fixture(), fixtures::mono_digon_fixture(),
        random_projection(9, 7), random_projection(11, 8)}) {
    auto h = resolve_l6n1_with_history(p);
    for (std::size_t k = 0; k + 1 < h.diagrams.size(); k++)
      CHECK(step_preserves_link(h.diagrams[k], h.diagrams[k + 1]));
    CHECK(is_l6n1(h.final()).ok);

    // Vertices alive on both sides of a step keep their resolution.
    for (std::size_t k = 0; k < h.reduction.trace.steps.size(); k++) {
      const auto& pre = h.diagrams[k].resolution;
      const auto& post = h.diagrams[k + 1].resolution;
      const auto& step = h.reduction.trace.steps[k];
      const std::vector<int>& vmap = std::holds_alternative<ShortcutStep>(step)
                                         ? std::get<ShortcutStep>(step).vertex_map
                                         : std::get<ThetaStep>(step).vertex_map;
      int tu = std::holds_alternative<ThetaStep>(step) ? std::get<ThetaStep>(step).u : -1;
      int tv = std::holds_alternative<ThetaStep>(step) ? std::get<ThetaStep>(step).v : -1;
      int tw = std::holds_alternative<ThetaStep>(step) ? std::get<ThetaStep>(step).w : -1;
      for (std::size_t v = 0; v < vmap.size(); v++) {
        if (vmap[v] < 0 || (int)v == tu || (int)v == tv || (int)v == tw) continue;
        CHECK(pre.over_parity[v] == post.over_parity[vmap[v]]);
      }
    }
  }
}
