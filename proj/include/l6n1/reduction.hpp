#pragma once

#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "l6n1/projection.hpp"

namespace l6n1 {

enum class IrreducibleClass { Krupp, NonKrupp };

inline const char* irreducible_class_name(IrreducibleClass c) {
  return c == IrreducibleClass::Krupp ? "Krupp" : "NonKrupp";
}

// Everything needed to replay the step forward and to pull a resolution on
// the post-state back to the pre-state.
struct ShortcutStep {
  int face, edge_e, edge_e2;
  Colour colour;
  std::vector<Dart> discarded;                    // pre-state walk slice, x to y
  std::vector<int> vertex_map;                    // pre vertex -> post vertex, -1 if removed
  std::vector<std::pair<int, int>> occurrences;   // (removed vertex, strand parity), x->y order
  int post_vertex_count = 0;
};

struct ThetaStep {
  int u = -1, v = -1, w = -1, edge_e = -1;
  int smoothing = -1;  // 0: glue slot pairs (0,1),(2,3) at u; 1: (1,2),(3,0)
  std::vector<int> vertex_map;
  int parity_cycle_at_v = 0, parity_cycle_at_w = 0, parity_entering_at_u = 0;
  int post_vertex_count = 0;
};

using TraceStep = std::variant<ShortcutStep, ThetaStep>;

struct ReductionTrace {
  std::vector<TraceStep> steps;
};

std::pair<Projection, TraceStep> apply_shortcut(const Projection& p, const ShortcutMove& m);
std::pair<Projection, TraceStep> apply_theta_split(const Projection& p, const ThetaMove& m);

namespace detail {
// Forces one of the two planar smoothings at u; the wrong one fails walk
// validation. Exposed for white-box tests.
Projection apply_theta_smoothing(const Projection& p, const ThetaMove& m, int smoothing,
                                 std::vector<int>* vertex_map);
}  // namespace detail

bool is_irreducible(const Projection& p);

struct ReduceResult {
  Projection reduced;
  ReductionTrace trace;
  std::vector<Projection> stages;  // stages[0] = input, stages.back() = reduced
};

ReduceResult reduce(const Projection& p);
// `pick(count)` chooses among the applicable moves, shortcuts listed first.
ReduceResult reduce_with_policy(const Projection& p,
                                const std::function<std::size_t(std::size_t)>& pick);

struct ClassifiedIrreducible {
  IrreducibleClass cls;
  IsoResult iso_from_fixture;  // fixture darts -> p darts
};
ClassifiedIrreducible classify_irreducible(const Projection& p);

std::string serialize_trace(const ReductionTrace& t);
// Parses and replays a serialized trace against its initial projection,
// reconstructing full steps. Throws StepMismatch when the lines do not match
// applicable moves.
ReductionTrace replay_trace(const Projection& initial, const std::string& text);

}  // namespace l6n1
