#include <doctest.h>

#include "oracles.hpp"
#include "torusalt/braid.hpp"

using namespace torusalt;

namespace {
BraidWord W(std::vector<int> v, int strands = 0) { return BraidWord::from_signed(v, strands); }
}  // namespace

TEST_CASE("parsing and printing") {
  const BraidWord w = BraidWord::parse("1 2 3 1 2 3 -2");
  CHECK(w.strands() == 4);
  CHECK(w.length() == 7);
  CHECK(w.letters()[6] == Letter{2, -1});
  CHECK(w.to_text() == "1 2 3 1 2 3 -2");
  CHECK(BraidWord::parse("").strands() == 2);
  CHECK(BraidWord::parse("  1\t-1 ", 5).strands() == 5);
  CHECK_THROWS_AS(BraidWord::parse("1 0"), ParseError);
  CHECK_THROWS_AS(BraidWord::parse("1 x"), ParseError);
  CHECK_THROWS_AS(BraidWord::parse("1 2x"), ParseError);
  CHECK_THROWS_AS(BraidWord::parse("3", 3), InvalidArgument);
  CHECK_THROWS_AS(BraidWord(0, {}), InvalidArgument);
}

TEST_CASE("word operations") {
  const BraidWord w = W({1, -2, 3});
  CHECK(w.inverse().to_signed() == std::vector<int>{-3, 2, -1});
  CHECK(w.mirror().to_signed() == std::vector<int>{-1, 2, -3});
  CHECK(w.pow(2).length() == 6);
  CHECK((w * w.inverse()).length() == 6);
  CHECK(equal(w * w.inverse(), BraidWord(4, {})));
  CHECK_THROWS_AS(W({1}) * W({1, 2}), StrandMismatch);
}

TEST_CASE("torus braids") {
  CHECK(torus_braid(2, 3).to_signed() == std::vector<int>{1, 1, 1});
  CHECK(torus_braid(4, 5).length() == 15);
  CHECK(torus_braid(4, 5).strands() == 4);
  CHECK_THROWS_AS(torus_braid(1, 3), InvalidArgument);
}

TEST_CASE("permutations and components") {
  CHECK(permutation(W({1})) == Permutation{1, 0});
  CHECK(closure_components(W({1})) == 1);
  const BraidWord sq = torus_braid(4, 2);
  CHECK(permutation(sq) == Permutation{2, 3, 0, 1});
  CHECK(closure_components(sq) == 2);
  for (int n = 1; n <= 5; ++n) CHECK(closure_components(torus_braid(4, 2 * n + 1)) == 1);
  CHECK(closure_components(BraidWord(3, {})) == 3);
  CHECK(closure_components(torus_braid(3, 3)) == 3);
}

TEST_CASE("writhe and flips") {
  CHECK(writhe(W({1, 1, 1})) == 3);
  CHECK(writhe(W({1, -1})) == 0);
  CHECK(writhe(torus_braid(4, 9)) == 27);
  const BraidWord t = W({1, 1, 1});
  const BraidWord f = flip(t, {1});
  CHECK(f.to_signed() == std::vector<int>{1, -1, 1});
  CHECK(equal(f, W({1})));
  CHECK(flip(t, {}) == t);
  CHECK(flip(flip(t, {2}), {2}) == t);
  CHECK_THROWS_AS(flip(t, {3}), IndexOutOfRange);
}

TEST_CASE("braid group equalities") {
  CHECK(equal(W({1, 2, 1}), W({2, 1, 2})));
  CHECK(equal(W({1, 3}, 4), W({3, 1}, 4)));
  const BraidWord ft = torus_braid(4, 4);
  CHECK(equal(ft * W({2}, 4), W({2}, 4) * ft));
  CHECK_FALSE(equal(W({1, 2}), W({2, 1})));
  CHECK_FALSE(equal(W({1, 1}), BraidWord(2, {})));
  CHECK_THROWS_AS(equal(W({1}), W({1}, 3)), StrandMismatch);
  CHECK(equal(half_twist(4).pow(2), ft));
  CHECK(equal(half_twist(3), W({1, 2, 1})));
}

TEST_CASE("normal form structure") {
  const NormalForm nf = normal_form(W({1, -2, 3, -1, 2, 2, -3}));
  CHECK(nf.strands == 4);
  for (const auto& f : nf.factors) {
    bool identity = true, delta = true;
    for (int i = 0; i < 4; ++i) {
      identity = identity && f[i] == i;
      delta = delta && f[i] == 3 - i;
    }
    CHECK_FALSE(identity);
    CHECK_FALSE(delta);
  }
  CHECK(normal_form(nf.to_word()) == nf);
  CHECK(normal_form(half_twist(4).inverse()).delta_power == -1);
  CHECK(normal_form(half_twist(4).inverse()).factors.empty());
  CHECK(normal_form(BraidWord(4, {})).delta_power == 0);
}

TEST_CASE("permutation braid words") {
  const Permutation p{2, 0, 3, 1};
  const BraidWord w = permutation_braid_word(p);
  CHECK(permutation(w) == p);
  for (const auto& l : w.letters()) CHECK(l.sign == 1);
}

TEST_CASE("band words") {
  const BraidWord ft = band_words(BandKind::full_twist);
  const BraidWord fht = band_words(BandKind::full_and_half);
  CHECK(equal(ft, torus_braid(4, 4)));
  CHECK(equal(fht, torus_braid(4, 6)));
  CHECK(equal(W({2, 1, 3, 2}, 4).pow(2) * W({1, 1, 3, 3}, 4), torus_braid(4, 4)));
  CHECK(fht.length() == 18);
  CHECK(writhe(fht) == 18);
  CHECK(permutation(ft) == Permutation{0, 1, 2, 3});
}

TEST_CASE("equality is compatible with permutation and writhe") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 3 + trial % 2;
    const auto a = oracle::random_word(rng, k, 8);
    auto b = a;
    for (int r = 0; r < 3; ++r) b = oracle::random_rewrite(rng, b, k);
    const BraidWord wa = W(a, k), wb = W(b, k);
    REQUIRE(equal(wa, wb));
    CHECK(permutation(wa) == permutation(wb));
    CHECK(writhe(wa) == writhe(wb));
    const BraidWord wc = W(oracle::random_word(rng, k, 8), k);
    if (equal(wa, wc)) {
      CHECK(permutation(wa) == permutation(wc));
      CHECK(writhe(wa) == writhe(wc));
    }
  }
}

TEST_CASE("flip changes exactly the chosen letters") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = oracle::random_word(rng, 4, 12);
    if (a.empty()) continue;
    std::set<std::size_t> s;
    int pos = 0, neg = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (rng() % 3 == 0) {
        s.insert(i);
        (a[i] > 0 ? pos : neg)++;
      }
    const BraidWord w = W(a, 4), f = flip(w, s);
    std::size_t diff = 0;
    for (std::size_t i = 0; i < a.size(); ++i) diff += w.letters()[i] != f.letters()[i];
    CHECK(diff == s.size());
    CHECK(writhe(f) == writhe(w) - 2 * pos + 2 * neg);
  }
}
