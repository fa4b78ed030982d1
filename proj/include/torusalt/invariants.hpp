#pragma once

// Classical invariants of braid closures and torus knots.
//
// Conventions: the Jones polynomial is normalized so that the closure of
// s1 s1 s1 (the positive, right-handed trefoil) has V = t + t^3 - t^4. The
// signature is that of V + V^T for the Seifert matrix V built from the braid
// closure; positive knots have negative signature (sigma(T(2,3)) = -2).

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "torusalt/algebra.hpp"
#include "torusalt/braid.hpp"
#include "torusalt/diagram.hpp"

namespace torusalt {

struct TorusKnot {
  int p = 2;
  int q = 3;

  // Validates coprimality and p, q >= 2; stores p < q.
  static TorusKnot make(int a, int b);
  int genus() const { return (p - 1) * (q - 1) / 2; }
  BraidWord braid() const { return torus_braid(p, q); }
  std::string name() const;
  friend bool operator==(const TorusKnot&, const TorusKnot&) = default;
};

class KnotSpec {
 public:
  enum class Kind { unknot, torus, connected_sum, braid_closure };

  static KnotSpec unknot();
  static KnotSpec torus(TorusKnot k);
  static KnotSpec connected_sum(std::vector<KnotSpec> summands);
  // Throws MultiComponent unless the closure is a knot.
  static KnotSpec braid_closure(BraidWord w);

  Kind kind() const { return kind_; }
  const TorusKnot& torus_knot() const { return torus_; }
  const std::vector<KnotSpec>& summands() const { return summands_; }
  const BraidWord& braid() const { return braid_; }
  std::string describe() const;

 private:
  Kind kind_ = Kind::unknot;
  TorusKnot torus_{};
  std::vector<KnotSpec> summands_;
  BraidWord braid_;
};

struct InvariantSet {
  LaurentPoly alexander;
  LaurentPoly jones;
  int signature = 0;
  Integer determinant = 1;
  std::optional<int> genus;
  std::optional<int> tau;
  std::optional<int> s;
  std::optional<int> upsilon1;

  nlohmann::ordered_json to_json() const;
};

LaurentPoly alexander_torus(const TorusKnot& k);
LaurentPoly alexander_burau(const BraidWord& w);
// Unit-normalized det(V - t V^T).
LaurentPoly alexander_seifert(const IntMatrix& v);

// Reduced Burau image of a word, entries in Z[t, t^-1].
using PolyMatrix = std::vector<std::vector<LaurentPoly>>;
PolyMatrix reduced_burau(const BraidWord& w);
LaurentPoly determinant(PolyMatrix m);

// Kauffman bracket in the variable A with <unknot> = 1.
LaurentPoly kauffman_bracket_braid(const BraidWord& w);
LaurentPoly kauffman_bracket_statesum(const PDCode& d);
inline constexpr std::size_t kStateSumMaxCrossings = 22;
// (-A^3)^{-writhe} <D> with A = t^{-1/4}; knots only.
LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int writhe);
LaurentPoly jones_braid(const BraidWord& w);
LaurentPoly jones_diagram(const PDCode& d);

IntMatrix seifert_matrix(const BraidWord& w);
int signature_of_braid(const BraidWord& w);
int signature_of(const KnotSpec& k);

struct GenusTauS {
  int genus;
  int tau;
  int s;
};
GenusTauS genus_tau_s(const TorusKnot& k);

InvariantSet invariant_set(const KnotSpec& k);

}  // namespace torusalt
