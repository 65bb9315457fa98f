#pragma once

#include <cstdint>
#include <vector>

#include "l6n1/projection.hpp"

namespace l6n1 {

// Per-vertex over/under choice: over_parity[v] == 1 means the strand through
// slots 1/3 passes over the strand through slots 0/2.
struct Resolution {
  std::vector<std::uint8_t> over_parity;
  bool operator==(const Resolution& o) const { return over_parity == o.over_parity; }
};

// Per-component traversal direction relative to the stored straight walk.
struct Orientation {
  std::vector<std::uint8_t> reversed;  // one flag per straight walk
  static Orientation canonical(int components) { return Orientation{std::vector<std::uint8_t>(components, 0)}; }
};

struct Diagram {
  Projection projection;
  Resolution resolution;
};

}  // namespace l6n1
