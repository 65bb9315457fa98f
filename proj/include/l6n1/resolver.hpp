#pragma once

#include <array>

#include "l6n1/diagram.hpp"
#include "l6n1/reduction.hpp"

namespace l6n1 {

// Over-parities realizing L6n1 on the reference irreducibles, vertex order as
// in the fixtures. Pinned by the brute-force search in the resolver tests.
const std::array<std::uint8_t, 6>& base_bits(IrreducibleClass cls);

// Lift table for a theta step, keyed by the post-state resolutions at (v, w)
// expressed in the cycle frame (1 = cycle strand over). Values give the
// framed resolutions of (u, v, w) in the pre-state, with u framed by its
// cycle-entering strand. Pinned by the oracle search in the resolver tests.
struct ThetaLiftEntry {
  std::uint8_t u, v, w;
};
const std::array<std::array<ThetaLiftEntry, 2>, 2>& theta_lift_table();

// Fixed resolution of an irreducible projection realizing L6n1, transported
// from the reference fixture through the classification witness.
Resolution base_resolution(const Projection& p, const ClassifiedIrreducible& cls);

// Pull a resolution on the step's post-state back to its pre-state.
Resolution lift_step(const Resolution& post, const TraceStep& step);

Diagram resolve_l6n1(const Projection& p);

struct ResolveHistory {
  ReduceResult reduction;
  std::vector<Diagram> diagrams;  // aligned with reduction.stages, lifted back to front
  Diagram final() const { return diagrams.front(); }
};
ResolveHistory resolve_l6n1_with_history(const Projection& p);

}  // namespace l6n1
