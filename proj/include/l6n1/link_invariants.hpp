#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "l6n1/diagram.hpp"
#include "l6n1/laurent.hpp"

namespace l6n1 {

// delta = -A^2 - A^-2, the loop factor of the bracket state sum.
Laurent bracket_delta();

// Bracket of k crossing-free loops, delta^(k-1); the k = 1 base case is the
// normalization <loop> = 1.
Laurent bracket_of_crossingless_loops(int k);

int crossing_cap();  // default 20, override via L6N1_MAX_CROSSINGS

// Kauffman bracket over all 2^V smoothing states, normalized to 1 on a
// single crossing-free loop. Throws TooManyCrossings above the cap.
Laurent kauffman_bracket(const PlanarMap& map, const Resolution& res, int cap = -1);

// Signed crossing sum; components oriented along their stored straight walks
// unless reversed.
int writhe(const PlanarMap& map, const Resolution& res, const Orientation& orient);
int linking_number(const PlanarMap& map, const Resolution& res, const Orientation& orient,
                   int comp_i, int comp_j);

Laurent jones(const PlanarMap& map, const Resolution& res, const Orientation& orient,
              int cap = -1);

// Jones values over every component orientation choice: an invariant of the
// unoriented link, independent of how walks happen to be directed.
std::set<Laurent> jones_all_orientations(const PlanarMap& map, const Resolution& res,
                                         int cap = -1);

// Convenience on diagrams with canonical orientations.
Laurent kauffman_bracket(const Diagram& d, int cap = -1);
Laurent jones(const Diagram& d, int cap = -1);
int writhe(const Diagram& d);
int linking_number(const Diagram& d, int comp_i, int comp_j);

// Sorted |lk| over component pairs.
std::vector<int> abs_linking_profile(const PlanarMap& map, const Resolution& res);
std::vector<int> abs_linking_profile(const Diagram& d);

// Flip every crossing: the diagram of the mirror link.
Resolution mirrored(const Resolution& res);

struct L6n1Reference {
  Diagram diagram;
  std::set<Laurent> jones_set;  // all component orientations, both mirrors
};
const L6n1Reference& l6n1_reference();

struct L6n1Verdict {
  bool ok = false;
  int components = 0;
  std::vector<int> abs_lk;
  Laurent jones_value;
  bool profile_ok = false;
  bool jones_ok = false;
  std::string reason;
};

// Accepts iff the diagram has three components, pairwise |lk| = (1,1,1) and
// Jones in the reference set (any orientation, either mirror).
L6n1Verdict is_l6n1(const PlanarMap& map, const Resolution& res, int cap = -1);
L6n1Verdict is_l6n1(const Diagram& d, int cap = -1);

}  // namespace l6n1
