#include <random>

#include "doctest.h"
#include "satake/weyl.hpp"

using namespace satake;

TEST_CASE("finite Weyl group orders") {
  CHECK(FiniteWeylGroup(parse_group("SL(3)")).size() == 6);
  CHECK(FiniteWeylGroup(parse_group("SL(4)")).size() == 24);
  CHECK(FiniteWeylGroup(parse_group("Sp(4)")).size() == 8);
  CHECK(FiniteWeylGroup(parse_group("GL(2)xSL(2)")).size() == 4);
  CHECK(FiniteWeylGroup(parse_group("torus(2)")).size() == 1);
  const FiniteWeylGroup w(parse_group("Sp(4)"));
  CHECK(w.length(w.longest()) == 4);
}

TEST_CASE("braid relations") {
  const AffineWeylGroup W(parse_group("SL(3)"));
  // s1 s2 s1 = s2 s1 s2, and the same for each pair involving s0.
  for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
    CHECK(W.evaluate({std::size_t(i), std::size_t(j), std::size_t(i)}) ==
          W.evaluate({std::size_t(j), std::size_t(i), std::size_t(j)}));
  }
  const AffineWeylGroup C(parse_group("Sp(4)"));
  CHECK(C.evaluate({0, 1, 0, 1}) == C.evaluate({1, 0, 1, 0}));
  // s0 is orthogonal to the long simple root and braids with the short one.
  CHECK(C.evaluate({0, 2, 0, 2}) == C.evaluate({2, 0, 2, 0}));
  CHECK(C.evaluate({1, 2}) == C.evaluate({2, 1}));
  CHECK(C.evaluate({0, 2, 0}) != C.evaluate({2, 0, 2}));
  for (std::size_t i = 0; i < C.num_simple(); ++i) CHECK(C.evaluate({i, i}) == C.identity());
}

TEST_CASE("length is inversion invariant and matches reduced words") {
  for (const char* g : {"PGL(2)", "GL(2)", "SL(3)", "PGL(3)", "Sp(4)"}) {
    const AffineWeylGroup W(parse_group(g));
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, W.num_simple() - 1);
    for (int t = 0; t < 100; ++t) {
      std::vector<std::size_t> word(rng() % 9);
      for (auto& s : word) s = pick(rng);
      const AffineWeylElement x = W.evaluate(word);
      CHECK(W.length(x) == W.length(W.inverse(x)));
      CHECK(W.length(x) <= word.size());
      CHECK(W.length(x) % 2 == word.size() % 2);
      const auto red = W.reduced_word(x);
      CHECK(red.word.size() == W.length(x));
      CHECK(W.multiply(W.evaluate(red.word), red.omega) == x);
    }
  }
}

TEST_CASE("translation lengths") {
  for (const char* g : {"GL(3)", "PGL(3)", "Sp(4)", "SL(2)"}) {
    const RootDatum rd = parse_group(g);
    const AffineWeylGroup W(rd);
    const std::size_t top = W.finite().length(W.finite().longest());
    for (const auto& mu : dominant_cocharacters(rd, 6)) {
      CHECK(W.length(W.translation(mu.value())) == std::size_t(d_pairing(rd, mu)));
      const DoubleCoset dc = W.spherical_double_coset(mu);
      CHECK(W.length(dc.maximal) == std::size_t(d_pairing(rd, mu)) + top);
    }
  }
}

TEST_CASE("length zero elements realise pi1") {
  for (const char* g : {"SL(3)", "PGL(2)", "PGL(3)", "Sp(4)"}) {
    const RootDatum rd = parse_group(g);
    const AffineWeylGroup W(rd);
    CHECK(W.omega_elements(2).size() == rd.pi1_order());
  }
  // Conjugation by the generator of Omega rotates the affine Dynkin diagram.
  const AffineWeylGroup W(parse_group("PGL(3)"));
  for (const auto& om : W.omega_elements(2)) {
    const auto perm = W.omega_action(om);
    for (std::size_t i = 0; i < perm.size(); ++i) {
      CHECK(W.multiply(W.multiply(om, W.simple_reflection(i)), W.inverse(om)) == W.simple_reflection(perm[i]));
    }
  }
}

TEST_CASE("bruhat order does not depend on the reduced word") {
  const AffineWeylGroup W(parse_group("SL(3)"));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, W.num_simple() - 1);
  for (int t = 0; t < 150; ++t) {
    std::vector<std::size_t> vw(rng() % 5), ww(rng() % 7);
    for (auto& s : vw) s = pick(rng);
    for (auto& s : ww) s = pick(rng);
    const AffineWeylElement v = W.evaluate(vw), w = W.evaluate(ww);
    const bool small = W.bruhat_leq(v, w, DescentTieBreak::Smallest);
    CHECK(small == W.bruhat_leq(v, w, DescentTieBreak::Largest));
    if (small) CHECK(W.length(v) <= W.length(w));
  }
  CHECK(W.bruhat_leq(W.identity(), W.evaluate({0, 1, 2})));
  CHECK(W.bruhat_leq(W.evaluate({0, 2}), W.evaluate({0, 1, 2})));
  CHECK_FALSE(W.bruhat_leq(W.evaluate({1, 0}), W.evaluate({0, 1})));
}

TEST_CASE("formatting") {
  const AffineWeylGroup W(parse_group("GL(2)"));
  CHECK(W.format(W.translation({1, 0})) == "t[1,0]·e");
  CHECK(W.affine_word_string({}) == "e");
  CHECK(W.affine_word_string({0, 1}) == "s1s0");
}
