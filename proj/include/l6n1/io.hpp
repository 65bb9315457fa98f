#pragma once

#include <string>

#include "l6n1/diagram.hpp"
#include "l6n1/projection.hpp"

namespace l6n1 {

// Text format, one record per projection:
//   vertices <V>
//   edge <id> <dartA> <dartB> <B|R|G>     (slots 0..3 counterclockwise,
//                                          straight pairing slot k <-> k+2)
// Diagrams append one line per vertex:
//   over <vertex> <0|1>                   (1: the slot-1/3 strand is on top)
// '#' starts a comment. Parsing reports 1-based line numbers.

Projection parse_projection(const std::string& text);
std::string serialize_projection(const Projection& p);

Diagram parse_diagram(const std::string& text);
std::string serialize_diagram(const Diagram& d);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace l6n1
