#include <random>

#include "doctest.h"
#include "satake/errors.hpp"
#include "satake/laurent.hpp"

using satake::LaurentPoly;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 4), ex(-3, 3), co(-5, 5);
  std::vector<LaurentPoly::Term> terms;
  for (int i = len(rng); i > 0; --i) terms.emplace_back(ex(rng), co(rng));
  return LaurentPoly::from_terms(terms);
}

}  // namespace

TEST_CASE("laurent ring axioms on random elements") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly());
    CHECK(a * LaurentPoly(1) == a);
    CHECK((a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one());
    CHECK((a * b).invert_q() == a.invert_q() * b.invert_q());
    if (!b.is_zero()) CHECK((a * b).divide_exact(b) == a);
  }
}

TEST_CASE("laurent normal form drops zero terms") {
  const LaurentPoly p = LaurentPoly::from_terms({{1, 2}, {1, -2}, {0, 3}});
  CHECK(p == LaurentPoly(3));
  CHECK(p.size() == 1);
  CHECK(LaurentPoly::from_terms({{2, 0}}).is_zero());
}

TEST_CASE("laurent formatting") {
  const LaurentPoly q = LaurentPoly::q();
  CHECK(LaurentPoly().str() == "0");
  CHECK((q - 1).str() == "-1 + q");
  CHECK((q * q + LaurentPoly::q_power(-1)).str() == "q^-1 + q^2");
  CHECK((LaurentPoly(-1) * q).str() == "-q");
}

TEST_CASE("laurent exact division") {
  const LaurentPoly q = LaurentPoly::q();
  const LaurentPoly p = (1 + q) * (1 + q + q * q);
  CHECK(p.divide_exact(1 + q) == 1 + q + q * q);
  CHECK_THROWS_AS(p.divide_exact(LaurentPoly(2) + q * q), satake::NotDivisible);
  CHECK_THROWS_AS(LaurentPoly(3).divide_exact(satake::BigInt(2)), satake::NotDivisible);
}

TEST_CASE("laurent json round trip") {
  const LaurentPoly p = LaurentPoly::from_terms({{-2, 4}, {5, -1}});
  CHECK(LaurentPoly::from_json(p.to_json()) == p);
}

TEST_CASE("laurent coefficients are unbounded") {
  LaurentPoly p = 1 + LaurentPoly::q();
  LaurentPoly acc(1);
  for (int i = 0; i < 100; ++i) acc *= p;
  // Central binomial coefficient C(100, 50).
  CHECK(acc.coeff(50).str() == "100891344545564193334812497256");
}
