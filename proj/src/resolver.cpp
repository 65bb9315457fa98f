#include "l6n1/resolver.hpp"

#include "l6n1/fixtures.hpp"

namespace l6n1 {

namespace {

// Pinned by the 64-way searches in test_resolver (lexicographically least
// realizing resolution per class; 8 of 64 realize on Krupp, 6 on NonKrupp).
constexpr std::array<std::uint8_t, 6> kBaseKrupp = {0, 1, 0, 1, 0, 1};
constexpr std::array<std::uint8_t, 6> kBaseNonKrupp = {0, 0, 0, 0, 1, 1};

// Pinned by the invariant-preservation oracle in test_resolver. Keyed by the
// framed post-state bits at (v, w); equal cases keep the cycle under on both
// strands, mixed cases swap the clasp and set u accordingly.
constexpr std::array<std::array<ThetaLiftEntry, 2>, 2> kThetaLift = {{
    {{{0, 0, 0}, {1, 1, 0}}},
    {{{0, 0, 1}, {0, 0, 0}}},
}};

}  // namespace

const std::array<std::uint8_t, 6>& base_bits(IrreducibleClass cls) {
  return cls == IrreducibleClass::Krupp ? kBaseKrupp : kBaseNonKrupp;
}

const std::array<std::array<ThetaLiftEntry, 2>, 2>& theta_lift_table() { return kThetaLift; }

Resolution base_resolution(const Projection& p, const ClassifiedIrreducible& cls) {
  if (p.map().vertex_count() != 6)
    fail(Errc::NotIrreducible, "base resolutions live on the 6-vertex irreducibles");
  const auto& bits = base_bits(cls.cls);
  const auto& iso = cls.iso_from_fixture;
  if (!iso.isomorphic || (int)iso.dart_map.size() != p.map().dart_count())
    fail(Errc::ValidationError, "classification witness does not fit the projection");
  Resolution res{std::vector<std::uint8_t>(6, 0)};
  for (int fv = 0; fv < 6; fv++) {
    // The fixture's over-strand of parity bits[fv] maps to the image dart's
    // strand; its slot parity is the transported bit.
    Dart image = iso.dart_map[make_dart(fv, bits[fv])];
    res.over_parity[dart_vertex(image)] = std::uint8_t(dart_slot(image) & 1);
  }
  return res;
}

namespace {

Resolution lift_shortcut(const Resolution& post, const ShortcutStep& s) {
  Resolution pre{std::vector<std::uint8_t>(s.vertex_map.size(), 0)};
  std::vector<bool> set(s.vertex_map.size(), false);
  for (std::size_t v = 0; v < s.vertex_map.size(); v++) {
    if (s.vertex_map[v] >= 0) {
      pre.over_parity[v] = post.over_parity[s.vertex_map[v]];
      set[v] = true;
    }
  }
  // Descending pass along the discarded walk: the first visit of a restored
  // vertex puts the traversed strand on top.
  for (auto [v, parity] : s.occurrences) {
    if (set[v]) continue;
    pre.over_parity[v] = std::uint8_t(parity);
    set[v] = true;
  }
  for (bool b : set)
    if (!b) fail(Errc::StepMismatch, "shortcut lift left a vertex unresolved");
  return pre;
}

Resolution lift_theta(const Resolution& post, const ThetaStep& s) {
  Resolution pre{std::vector<std::uint8_t>(s.vertex_map.size(), 0)};
  for (std::size_t v = 0; v < s.vertex_map.size(); v++)
    if (s.vertex_map[v] >= 0) pre.over_parity[v] = post.over_parity[s.vertex_map[v]];
  int post_v = s.vertex_map[s.v], post_w = s.vertex_map[s.w];
  if (post_v < 0 || post_w < 0) fail(Errc::StepMismatch, "theta step lost v or w");
  int framed_v = post.over_parity[post_v] == s.parity_cycle_at_v ? 1 : 0;
  int framed_w = post.over_parity[post_w] == s.parity_cycle_at_w ? 1 : 0;
  const ThetaLiftEntry& entry = theta_lift_table()[framed_v][framed_w];
  auto unframe = [](int framed, int parity) {
    return std::uint8_t(framed ? parity : 1 - parity);
  };
  pre.over_parity[s.u] = unframe(entry.u, s.parity_entering_at_u);
  pre.over_parity[s.v] = unframe(entry.v, s.parity_cycle_at_v);
  pre.over_parity[s.w] = unframe(entry.w, s.parity_cycle_at_w);
  return pre;
}

}  // namespace

Resolution lift_step(const Resolution& post, const TraceStep& step) {
  if (std::holds_alternative<ShortcutStep>(step)) {
    const auto& s = std::get<ShortcutStep>(step);
    if ((int)post.over_parity.size() != s.post_vertex_count)
      fail(Errc::StepMismatch, "resolution does not cover the post-state");
    return lift_shortcut(post, s);
  }
  const auto& s = std::get<ThetaStep>(step);
  if ((int)post.over_parity.size() != s.post_vertex_count)
    fail(Errc::StepMismatch, "resolution does not cover the post-state");
  return lift_theta(post, s);
}

ResolveHistory resolve_l6n1_with_history(const Projection& p) {
  if (!p.is_pairwise_crossing())
    fail(Errc::NotPairwiseCrossing, "only pairwise crossing projections realize the link");
  ResolveHistory h;
  h.reduction = reduce(p);
  ClassifiedIrreducible cls = classify_irreducible(h.reduction.reduced);
  Resolution res = base_resolution(h.reduction.reduced, cls);
  h.diagrams.resize(h.reduction.stages.size());
  h.diagrams.back() = Diagram{h.reduction.reduced, res};
  for (int k = (int)h.reduction.trace.steps.size() - 1; k >= 0; k--) {
    res = lift_step(res, h.reduction.trace.steps[k]);
    h.diagrams[k] = Diagram{h.reduction.stages[k], res};
  }
  return h;
}

Diagram resolve_l6n1(const Projection& p) { return resolve_l6n1_with_history(p).final(); }

}  // namespace l6n1
