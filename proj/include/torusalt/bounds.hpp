#pragma once

// Bounds on the alternating number of torus knots.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "torusalt/algebra.hpp"
#include "torusalt/invariants.hpp"

namespace torusalt {

struct Provenance {
  std::string method;
  std::string citation;
};

struct AltBounds {
  int lower = 0;
  std::optional<int> upper;
  std::optional<int> exact;
  std::vector<Provenance> provenance;

  nlohmann::ordered_json to_json() const;
  // Citations joined by " / ".
  std::string provenance_text() const;
};

struct AsymptoticBound {
  int p;
  Rational lower;
  bool known_sharp;  // equality with the limit slope is established
};

// |x - y|. Valid as a lower bound for alt(K) when x and y are invariants that
// agree on alternating knots and move by at most one, in the same direction,
// under a positive-to-negative crossing change.
Rational pair_lower_bound(const Rational& x, const Rational& y);

// |tau + upsilon|, i.e. pair_lower_bound(-tau, upsilon).
int tau_upsilon_bound(const TorusKnot& k);

// |s + sigma| / 2 with s = 2g and sigma from the Seifert form (negative on
// positive knots); this is |s - sigma'| / 2 for the opposite signature
// convention.
Rational abe_bound(const TorusKnot& k);

// floor(g/3) for braid index 3 or 4, 0 for braid index 2, empty otherwise.
std::optional<int> alt_exact(const TorusKnot& k);

struct UpperBound {
  int value;
  Provenance source;
  std::optional<std::pair<Rational, Rational>> superseded;  // earlier braid-index-4 range
};
std::optional<UpperBound> upper_bounds(const TorusKnot& k);

AsymptoticBound asymptotic_lower(int p);

struct IntInterval {
  int low;
  int high;
  friend bool operator==(const IntInterval&, const IntInterval&) = default;
};

// Range for alt(T(p,l)) given alt(T(p,k)) = alt_k, from
// |alt(T(p,k)) - alt(T(p,l))| <= (p-1)/2 |k - l|.
IntInterval lipschitz_transfer(int p, int k, int l, int alt_k);

AltBounds alt_bounds(const TorusKnot& k);

}  // namespace torusalt
