#pragma once

// The Upsilon invariant of L-space knots, read off the staircase determined
// by the Alexander polynomial.

#include <utility>
#include <vector>

#include "torusalt/algebra.hpp"

namespace torusalt {

struct TorusKnot;

// Exponents a_0 > a_1 > ... > a_{2m} of Delta = sum (-1)^k t^{a_k}.
struct ExponentSeq {
  std::vector<int> exponents;
  int genus() const { return exponents.front(); }
};

// Lattice points v_0 = (0, g), ..., v_{2m} = (g, 0).
struct Staircase {
  std::vector<std::pair<int, int>> vertices;
  int genus() const { return vertices.front().second; }
};

// Throws NotStaircaseForm unless Delta is symmetric with alternating +-1
// coefficients and leading coefficient +1.
ExponentSeq exponents_of(const LaurentPoly& alexander);

// First step right by a_0 - a_1, then down by a_1 - a_2, alternating.
Staircase staircase_of(const ExponentSeq& e);

// Upsilon(t) = max over even-index vertices (i, j) of -2[(t/2) i + (1 - t/2) j].
PiecewiseLinear upsilon_fn(const Staircase& s);

PiecewiseLinear upsilon_of(const TorusKnot& k);
// Upsilon(1); an integer for torus knots.
int upsilon1(const TorusKnot& k);

}  // namespace torusalt
