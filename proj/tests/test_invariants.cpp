#include <doctest.h>

#include "oracles.hpp"
#include "torusalt/invariants.hpp"

using namespace torusalt;

namespace {

BraidWord W(std::vector<int> v, int strands = 0) { return BraidWord::from_signed(v, strands); }
const LaurentPoly t = LaurentPoly::t();
LaurentPoly T(int e) { return LaurentPoly::t(e); }

}  // namespace

TEST_CASE("torus knot validation") {
  const TorusKnot k = TorusKnot::make(5, 3);
  CHECK(k.p == 3);
  CHECK(k.q == 5);
  CHECK(k.name() == "T(3,5)");
  CHECK(k.genus() == 4);
  CHECK_THROWS_AS(TorusKnot::make(4, 6), InvalidArgument);
  CHECK_THROWS_AS(TorusKnot::make(1, 6), InvalidArgument);
  CHECK_THROWS_AS(KnotSpec::braid_closure(torus_braid(2, 2)), MultiComponent);
}

TEST_CASE("alexander polynomial closed form") {
  CHECK(alexander_torus(TorusKnot::make(2, 3)) == t - 1 + T(-1));
  CHECK(alexander_torus(TorusKnot::make(3, 4)) == T(3) - T(2) + 1 - T(-2) + T(-3));
  CHECK(alexander_torus(TorusKnot::make(4, 5)) == T(6) - T(5) + T(2) - 1 + T(-2) - T(-5) + T(-6));
  for (int p = 2; p <= 6; ++p)
    for (int q = p + 1; q <= 15; ++q)
      if (std::gcd(p, q) == 1) CHECK(alexander_torus(TorusKnot::make(p, q)) == oracle::torus_alexander(p, q));
}

TEST_CASE("alexander polynomial from the Burau representation") {
  CHECK(alexander_burau(W({1, 1, 1})) == t - 1 + T(-1));
  CHECK(alexander_burau(flip(W({1, 1, 1}), {1})) == LaurentPoly(1));
  CHECK(alexander_burau(BraidWord(1, {})) == LaurentPoly(1));
  CHECK(alexander_burau(W({1, -2, 1, -2})) == -t + 3 - T(-1));
  for (int p = 2; p <= 4; ++p)
    for (int q = p + 1; q <= 13; ++q)
      if (std::gcd(p, q) == 1)
        CHECK(alexander_burau(torus_braid(p, q)) == alexander_torus(TorusKnot::make(p, q)));
  CHECK_THROWS_AS(alexander_burau(torus_braid(2, 4)), MultiComponent);
}

TEST_CASE("alexander polynomial from the Seifert matrix") {
  CHECK(alexander_seifert(seifert_matrix(W({1, 1, 1}))) == t - 1 + T(-1));
  CHECK(alexander_seifert(seifert_matrix(torus_braid(3, 7))) == alexander_torus(TorusKnot::make(3, 7)));
}

TEST_CASE("reduced burau determinant") {
  const PolyMatrix m = reduced_burau(W({1}));
  CHECK(m.size() == 1);
  CHECK(m[0][0] == -t);
  CHECK(determinant({{t, 1}, {1, t}}) == t * t - 1);
  CHECK(determinant({}) == LaurentPoly(1));
}

TEST_CASE("kauffman bracket and jones") {
  CHECK(jones_braid(BraidWord(1, {})) == LaurentPoly(1));
  CHECK(jones_braid(W({1, 1, 1})) == t + T(3) - T(4));
  CHECK(jones_braid(W({-1, -1, -1})) == T(-1) + T(-3) - T(-4));
  CHECK(jones_braid(W({1})) == LaurentPoly(1));
  CHECK(jones_braid(W({1, -2, 1, -2})) == T(2) - t + 1 - T(-1) + T(-2));
  const LaurentPoly curl = kauffman_bracket_statesum(closure_diagram(W({1})));
  CHECK(curl == -T(3));
  CHECK(kauffman_bracket_statesum(closure_diagram(BraidWord(1, {}))) == LaurentPoly(1));
  CHECK(kauffman_bracket_statesum(closure_diagram(W({1, 1, 1}))) == kauffman_bracket_braid(W({1, 1, 1})));
  CHECK_THROWS_AS(jones_braid(torus_braid(2, 2)), MultiComponent);
}

TEST_CASE("jones of torus knots matches the closed form") {
  for (int p = 2; p <= 5; ++p)
    for (int q = p + 1; q <= 13; ++q)
      if (std::gcd(p, q) == 1) CHECK(jones_braid(torus_braid(p, q)) == oracle::torus_jones(p, q));
}

TEST_CASE("state sum cap") {
  CHECK_THROWS_AS(kauffman_bracket_statesum(closure_diagram(torus_braid(2, 23))), TooLarge);
}

TEST_CASE("seifert matrix and signature") {
  const IntMatrix v = seifert_matrix(W({1, 1, 1}));
  CHECK(v.size() == 2);
  IntMatrix sym = v;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) sym[i][j] = v[i][j] + v[j][i];
  CHECK(signature_symmetric(sym) == -2);
  CHECK(signature_of_braid(W({1, 1, 1})) == -2);
  CHECK(signature_of(KnotSpec::torus(TorusKnot::make(3, 4))) == -6);
  CHECK(signature_of(KnotSpec::torus(TorusKnot::make(3, 5))) == -8);
  CHECK(signature_of(KnotSpec::torus(TorusKnot::make(4, 5))) == -8);
  CHECK(signature_of(KnotSpec::torus(TorusKnot::make(3, 7))) == -8);
  const auto trefoil = KnotSpec::torus(TorusKnot::make(2, 3));
  CHECK(signature_of(KnotSpec::connected_sum({trefoil, trefoil})) == -4);
  CHECK(signature_of(KnotSpec::unknot()) == 0);
  for (int p = 2; p <= 5; ++p)
    for (int q = p + 1; q <= 17; ++q)
      if (std::gcd(p, q) == 1)
        CHECK(signature_of(KnotSpec::torus(TorusKnot::make(p, q))) == oracle::torus_signature(p, q));
}

TEST_CASE("genus, tau and s of positive torus knots") {
  const auto g = genus_tau_s(TorusKnot::make(3, 4));
  CHECK(g.genus == 3);
  CHECK(g.tau == 3);
  CHECK(g.s == 6);
  for (int n = 1; n <= 4; ++n) CHECK(genus_tau_s(TorusKnot::make(4, 2 * n + 1)).tau == 3 * n);
  CHECK(genus_tau_s(TorusKnot::make(2, 3)).genus == 1);
}

TEST_CASE("invariant sets") {
  const auto t25 = KnotSpec::torus(TorusKnot::make(2, 5));
  const InvariantSet sum = invariant_set(KnotSpec::connected_sum({t25, t25}));
  CHECK(sum.alexander == (T(2) - t + 1 - T(-1) + T(-2)).pow(2));
  CHECK(sum.signature == -8);
  CHECK(sum.determinant == 25);
  CHECK(sum.genus == 4);
  CHECK(sum.upsilon1 == -4);

  const InvariantSet u = invariant_set(KnotSpec::unknot());
  CHECK(u.alexander == LaurentPoly(1));
  CHECK(u.jones == LaurentPoly(1));
  CHECK(u.signature == 0);
  CHECK(u.determinant == 1);

  const InvariantSet t34 = invariant_set(KnotSpec::torus(TorusKnot::make(3, 4)));
  CHECK(t34.determinant == 3);
  CHECK(t34.tau == 3);
  CHECK(t34.s == 6);

  const InvariantSet braid = invariant_set(KnotSpec::braid_closure(torus_braid(3, 4)));
  CHECK(braid.alexander == t34.alexander);
  CHECK(braid.jones == t34.jones);
  CHECK(braid.signature == t34.signature);
  CHECK_FALSE(braid.genus.has_value());

  const auto mixed = invariant_set(KnotSpec::connected_sum({t25, KnotSpec::braid_closure(W({1, -2, 1, -2}))}));
  CHECK_FALSE(mixed.tau.has_value());
  CHECK(mixed.determinant == 25);
}

TEST_CASE("invariant set json") {
  const auto j = invariant_set(KnotSpec::torus(TorusKnot::make(2, 3))).to_json();
  CHECK(j["signature"] == -2);
  CHECK(j["determinant"] == 3);
  CHECK(j["alexander"] == "t - 1 + t^-1");
  CHECK(j["genus"] == 1);
}
