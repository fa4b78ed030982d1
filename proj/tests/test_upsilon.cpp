#include <doctest.h>

#include <numeric>

#include "torusalt/invariants.hpp"
#include "torusalt/upsilon.hpp"

using namespace torusalt;

namespace {

using Vertices = std::vector<std::pair<int, int>>;
TorusKnot K(int p, int q) { return TorusKnot::make(p, q); }

}  // namespace

TEST_CASE("exponent sequences") {
  CHECK(exponents_of(alexander_torus(K(2, 3))).exponents == std::vector<int>{1, 0, -1});
  CHECK(exponents_of(alexander_torus(K(3, 4))).exponents == std::vector<int>{3, 2, 0, -2, -3});
  const LaurentPoly bad = LaurentPoly::t(2) + 1 + LaurentPoly::t(-2);
  CHECK_THROWS_AS(exponents_of(bad), NotStaircaseForm);
  CHECK_THROWS_AS(exponents_of(LaurentPoly::t(1) - 1), NotStaircaseForm);
  CHECK_THROWS_AS(exponents_of(LaurentPoly()), NotStaircaseForm);
  CHECK_THROWS_AS(exponents_of(-LaurentPoly::t(1) + 3 - LaurentPoly::t(-1)), NotStaircaseForm);
}

TEST_CASE("staircases") {
  CHECK(staircase_of(exponents_of(alexander_torus(K(2, 3)))).vertices == Vertices{{0, 1}, {1, 1}, {1, 0}});
  CHECK(staircase_of(exponents_of(alexander_torus(K(3, 4)))).vertices ==
        Vertices{{0, 3}, {1, 3}, {1, 1}, {3, 1}, {3, 0}});
  CHECK(staircase_of(exponents_of(alexander_torus(K(4, 5)))).vertices ==
        Vertices{{0, 6}, {1, 6}, {1, 3}, {3, 3}, {3, 1}, {6, 1}, {6, 0}});
  CHECK_THROWS_AS(staircase_of({{1, 0}}), InvalidArgument);
}

TEST_CASE("staircase invariants on torus knots") {
  for (int p = 2; p <= 5; ++p)
    for (int q = p + 1; q <= 19; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const TorusKnot k = K(p, q);
      const ExponentSeq e = exponents_of(alexander_torus(k));
      const Staircase s = staircase_of(e);
      const int g = k.genus();
      CHECK(e.genus() == g);
      CHECK(e.exponents.back() == -g);
      CHECK(s.vertices.front() == std::make_pair(0, g));
      CHECK(s.vertices.back() == std::make_pair(g, 0));
      CHECK(s.genus() == g);
      for (std::size_t r = 0; r + 1 < s.vertices.size(); ++r) {
        const auto [i0, j0] = s.vertices[r];
        const auto [i1, j1] = s.vertices[r + 1];
        const int gap = e.exponents[r] - e.exponents[r + 1];
        if (r % 2 == 0) {
          CHECK(i1 - i0 == gap);
          CHECK(j1 == j0);
        } else {
          CHECK(j0 - j1 == gap);
          CHECK(i1 == i0);
        }
      }
      std::set<std::pair<int, int>> pts(s.vertices.begin(), s.vertices.end());
      for (const auto& [i, j] : s.vertices) CHECK(pts.count({j, i}) == 1);
    }
}

TEST_CASE("upsilon functions") {
  CHECK(upsilon_of(K(2, 3)).breakpoints() == std::vector<Breakpoint>{{0, 0}, {1, -1}, {2, 0}});
  CHECK(upsilon_of(K(3, 4)).breakpoints() ==
        std::vector<Breakpoint>{{0, 0}, {make_rational(2, 3), -2}, {make_rational(4, 3), -2}, {2, 0}});
  CHECK(upsilon_of(K(4, 7)).slopes().front() == -9);
}

TEST_CASE("upsilon at one") {
  CHECK(upsilon1(K(3, 4)) == -2);
  CHECK(upsilon1(K(3, 7)) == -4);
  CHECK(upsilon1(K(3, 5)) == -3);
  CHECK(upsilon1(K(4, 5)) == -4);
  CHECK(upsilon1(K(4, 9)) == -8);
  for (int n = 1; n <= 6; ++n) {
    CHECK(upsilon1(K(3, 3 * n + 1)) == -2 * n);
    CHECK(upsilon1(K(3, 3 * n + 2)) == -2 * n - 1);
    CHECK(upsilon1(K(4, 2 * n + 1)) == -2 * n);
    CHECK(upsilon1(K(2, 2 * n + 1)) == -n);
    CHECK(-upsilon1(K(2, 2 * n + 1)) == genus_tau_s(K(2, 2 * n + 1)).tau);
    CHECK(2 * upsilon1(K(2, 2 * n + 1)) == signature_of(KnotSpec::torus(K(2, 2 * n + 1))));
  }
}

TEST_CASE("first step down would give the wrong value") {
  // Gaps 1,2,2,1 of T(3,4) walked down first from (0,3).
  const Staircase down{{{0, 3}, {0, 2}, {2, 2}, {2, 0}, {3, 0}}};
  CHECK(upsilon_fn(down).at(1) == -3);
  CHECK(upsilon_fn(staircase_of(exponents_of(alexander_torus(K(3, 4))))).at(1) == -2);
}

TEST_CASE("upsilon shape on the corpus") {
  for (int p = 2; p <= 5; ++p)
    for (int q = p + 1; q <= 21; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const TorusKnot k = K(p, q);
      const PiecewiseLinear u = upsilon_of(k);
      const auto slopes = u.slopes();
      CHECK(u.at(0) == 0);
      CHECK(slopes.front() == -k.genus());
      for (std::size_t i = 1; i < slopes.size(); ++i) CHECK(slopes[i] >= slopes[i - 1]);
      for (const auto& s : slopes) CHECK(abs(s) <= k.genus());
      for (const auto& b : u.breakpoints()) CHECK(u.at(2 - b.t) == b.value);
    }
}
