#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "torusalt/bounds.hpp"

using namespace torusalt;

namespace {
TorusKnot K(int p, int q) { return TorusKnot::make(p, q); }
}  // namespace

TEST_CASE("pair lower bound") {
  CHECK(pair_lower_bound(3, 2) == 1);
  CHECK(pair_lower_bound(0, 0) == 0);
  CHECK(pair_lower_bound(make_rational(5, 2), 1) == make_rational(3, 2));
  CHECK(pair_lower_bound(2, 3) == 1);
}

TEST_CASE("tau plus upsilon") {
  for (int n = 1; n <= 5; ++n) CHECK(tau_upsilon_bound(K(3, 3 * n + 1)) == n);
  CHECK(tau_upsilon_bound(K(3, 5)) == 1);
  CHECK(tau_upsilon_bound(K(4, 9)) == 4);
  CHECK(tau_upsilon_bound(K(2, 9)) == 0);
}

TEST_CASE("abe bound") {
  CHECK(abe_bound(K(2, 7)) == 0);
  CHECK(abe_bound(K(3, 4)) == 0);  // sigma(T(3,4)) = -6
  CHECK(abe_bound(K(3, 7)) == 2);
  CHECK(abe_bound(K(4, 9)) == 4);
  for (int p = 2; p <= 5; ++p)
    for (int q = p + 1; q <= 15; ++q)
      if (std::gcd(p, q) == 1) {
        const TorusKnot k = K(p, q);
        CHECK(abe_bound(k) == abs(Rational(2 * k.genus() + oracle::torus_signature(p, q))) / 2);
      }
}

TEST_CASE("exact values") {
  CHECK(alt_exact(K(2, 9)) == 0);
  CHECK(alt_exact(K(3, 4)) == 1);
  CHECK(alt_exact(K(3, 5)) == 1);
  CHECK(alt_exact(K(4, 5)) == 2);
  CHECK(alt_exact(K(4, 7)) == 3);
  CHECK_FALSE(alt_exact(K(5, 6)).has_value());
}

TEST_CASE("upper bounds") {
  CHECK(upper_bounds(K(3, 7))->value == 2);
  CHECK(upper_bounds(K(3, 7))->source.citation == "Prop 3.1");
  CHECK(upper_bounds(K(4, 11))->value == 5);
  CHECK(upper_bounds(K(4, 11))->source.citation == "Prop 3.2");
  CHECK(upper_bounds(K(2, 5))->value == 0);
  CHECK_FALSE(upper_bounds(K(5, 7)).has_value());
  const auto earlier_even = upper_bounds(K(4, 9))->superseded;
  REQUIRE(earlier_even);
  CHECK(earlier_even->first == 4);
  CHECK(earlier_even->second == 6);
  const auto earlier_odd = upper_bounds(K(4, 11))->superseded;
  CHECK(earlier_odd->first == 4);
  CHECK(earlier_odd->second == 7);
  const auto braid3 = upper_bounds(K(3, 10))->superseded;
  CHECK(braid3->first == 2);
  CHECK(braid3->second == 3);
}

TEST_CASE("sandwich closes for braid index at most four") {
  for (int p = 2; p <= 4; ++p)
    for (int q = p + 1; q <= 21; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const TorusKnot k = K(p, q);
      const AltBounds b = alt_bounds(k);
      CHECK(tau_upsilon_bound(k) == *alt_exact(k));
      CHECK(upper_bounds(k)->value == *alt_exact(k));
      CHECK(b.exact == alt_exact(k));
      CHECK(b.lower == *b.upper);
      CHECK(b.lower == k.genus() / 3 * (p == 2 ? 0 : 1));
      CHECK(abe_bound(k) <= tau_upsilon_bound(k));
    }
}

TEST_CASE("provenance") {
  CHECK(alt_bounds(K(4, 9)).provenance_text() == "Thm 1 / Prop 2.3 / Prop 3.2");
  CHECK(alt_bounds(K(3, 8)).provenance_text() == "Thm 1 / Prop 2.3 / Prop 3.1");
  const AltBounds open = alt_bounds(K(5, 6));
  CHECK_FALSE(open.upper.has_value());
  CHECK_FALSE(open.exact.has_value());
  CHECK(open.lower >= 0);
  const auto j = alt_bounds(K(4, 9)).to_json();
  CHECK(j["exact"] == 4);
  CHECK(j["provenance"].size() == 3);
}

TEST_CASE("asymptotic bounds") {
  CHECK(asymptotic_lower(3).lower == 1);
  CHECK(asymptotic_lower(3).known_sharp);
  CHECK(asymptotic_lower(4).lower == 2);
  CHECK(asymptotic_lower(5).lower == 4);
  CHECK_FALSE(asymptotic_lower(5).known_sharp);
  CHECK(asymptotic_lower(6).lower == 6);
  CHECK(asymptotic_lower(2).lower == 0);
  CHECK_THROWS_AS(asymptotic_lower(1), InvalidArgument);
  for (int n = 1; n <= 8; ++n) {
    CHECK(*alt_exact(K(3, 3 * (n + 1) + 1)) - *alt_exact(K(3, 3 * n + 1)) == 1);
    CHECK(*alt_exact(K(4, 2 * (n + 2) + 1)) - *alt_exact(K(4, 2 * n + 1)) == 2);
  }
}

TEST_CASE("lipschitz transfer") {
  CHECK(lipschitz_transfer(3, 4, 5, 1) == IntInterval{0, 2});
  CHECK(lipschitz_transfer(5, 7, 7, 3) == IntInterval{3, 3});
  CHECK(lipschitz_transfer(4, 5, 9, 2) == IntInterval{0, 8});
  CHECK_THROWS_AS(lipschitz_transfer(4, 6, 9, 2), InvalidArgument);
  // Consistent with the exact values it is meant to bracket.
  for (int k = 4; k <= 20; ++k)
    for (int l = 4; l <= 20; ++l)
      if (std::gcd(3, k) == 1 && std::gcd(3, l) == 1) {
        const auto r = lipschitz_transfer(3, k, l, *alt_exact(K(3, k)));
        const int target = *alt_exact(K(3, l));
        CHECK(r.low <= target);
        CHECK(target <= r.high);
      }
}
