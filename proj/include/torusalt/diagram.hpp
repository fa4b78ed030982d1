#pragma once

// Planar diagram codes for braid closures.
//
// Crossings use the usual PD convention X[i,j,k,l]: i is the incoming
// under-arc and the labels run counterclockwise. The over-arc runs l -> j on
// a positive crossing and j -> l on a negative one.
//
// Braid closures are drawn with the first letter at the bottom and strands
// oriented upward; arcs are numbered 1, 2, ... along the orientation starting
// with the arc that passes the bottom of the leftmost strand.

#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "torusalt/braid.hpp"

namespace torusalt {

struct PDCrossing {
  std::array<int, 4> arcs;
  int sign;  // +1 or -1

  int under_in() const { return arcs[0]; }
  int under_out() const { return arcs[2]; }
  int over_in() const { return sign > 0 ? arcs[3] : arcs[1]; }
  int over_out() const { return sign > 0 ? arcs[1] : arcs[3]; }
  // Same shadow, over and under exchanged.
  PDCrossing flipped() const;

  friend bool operator==(const PDCrossing&, const PDCrossing&) = default;
};

class PDCode {
 public:
  PDCode() = default;
  // free_loops counts crossingless unknotted components.
  PDCode(std::vector<PDCrossing> crossings, int free_loops = 0);

  const std::vector<PDCrossing>& crossings() const { return crossings_; }
  std::size_t crossing_count() const { return crossings_.size(); }
  int arc_count() const { return static_cast<int>(2 * crossings_.size()); }
  int free_loops() const { return free_loops_; }
  int components() const;
  int writhe() const;

  PDCode flip_crossings(const std::set<std::size_t>& indices) const;
  friend bool operator==(const PDCode&, const PDCode&) = default;

  std::string to_text() const;  // PD[X[1,4,2,5],...]
  nlohmann::ordered_json to_json() const;

 private:
  std::vector<PDCrossing> crossings_;
  int free_loops_ = 0;
};

PDCode closure_diagram(const BraidWord& w);

// A pass of the knot through a crossing, in traversal order.
struct Pass {
  std::size_t crossing;
  bool over;
};

// Passes in order along the orientation starting from arc 1; throws
// MultiComponent when the diagram is not a knot diagram.
std::vector<Pass> knot_passes(const PDCode& d);

bool is_alternating(const PDCode& d);

// Hamming distances from d's over/under assignment to the two alternating
// assignments of its shadow. The first assignment has the pass on arc 1
// going over.
std::pair<int, int> alternating_assignment_distances(const PDCode& d);
int alternating_distance(const PDCode& d);

// True iff some crossing separates the diagram: the arcs at that crossing do
// not all stay connected once it is removed (self-loops count as separate).
bool has_nugatory(const PDCode& d);

// Connected sum along arc 1 of a and an arc of b chosen so that alternating
// summands give an alternating sum.
PDCode connected_sum(const PDCode& a, const PDCode& b);

// Standard reduced alternating diagram of T(2,q1) # T(2,q2).
PDCode connected_sum_T2(int q1, int q2);

}  // namespace torusalt
