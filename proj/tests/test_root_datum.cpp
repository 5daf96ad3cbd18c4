#include "doctest.h"
#include "satake/oracles.hpp"
#include "satake/root_datum.hpp"

using namespace satake;

TEST_CASE("catalog pi1") {
  CHECK(parse_group("SL(3)").pi1_order() == 1);
  CHECK(parse_group("PGL(3)").pi1_order() == 3);
  CHECK(parse_group("PGL(2)").pi1_order() == 2);
  CHECK(parse_group("Sp(4)").pi1_order() == 1);
  CHECK(parse_group("GL(3)").pi1_free_rank() == 1);
  CHECK(parse_group("torus(2)").pi1_free_rank() == 2);
  CHECK(parse_group("SL(4)").positive_roots().size() == 6);
  CHECK(parse_group("Sp(4)").positive_roots().size() == 4);
}

TEST_CASE("two rho is the sum of positive roots") {
  for (const char* g : {"GL(1)", "GL(3)", "SL(4)", "PGL(3)", "Sp(4)", "GL(2)xSL(2)", "torus(1)"}) {
    const RootDatum rd = parse_group(g);
    CHECK(rd.two_rho() == oracle::two_rho_by_summation(rd));
    for (const auto& beta : rd.positive_coroots()) CHECK(d_pairing(rd, beta) == oracle::d_by_summation(rd, beta));
  }
}

TEST_CASE("dual is an involution") {
  for (const char* g : {"GL(3)", "SL(3)", "PGL(3)", "Sp(4)", "GL(2)xSL(2)"}) {
    const RootDatum rd = parse_group(g);
    CHECK(equivalent(dual(dual(rd)), rd));
  }
  CHECK(equivalent(dual(parse_group("SL(3)")), parse_group("PGL(3)")));
  CHECK(equivalent(dual(parse_group("GL(3)")), parse_group("GL(3)")));
  CHECK_FALSE(equivalent(parse_group("SL(3)"), parse_group("PGL(3)")));
}

TEST_CASE("epsilon and the modified dual group") {
  CHECK_FALSE(g1_data(parse_group("PGL(2)")).epsilon_trivial);
  CHECK(g1_data(parse_group("SL(2)")).epsilon_trivial);
  CHECK(g1_data(parse_group("PGL(3)")).epsilon_trivial);
  CHECK(g1_data(parse_group("Sp(4)")).epsilon_trivial);
  CHECK(g1_data(parse_group("GL(2)")).epsilon_trivial == false);
  CHECK(g1_data(parse_group("GL(3)")).epsilon_trivial);
  CHECK(g1_data(parse_group("GL(3)")).direct_product);
}

TEST_CASE("dominance and d") {
  const RootDatum rd = parse_group("GL(3)");
  CHECK(d_pairing(rd, LatticeVec{1, 0, 0}) == 2);
  CHECK(d_pairing(rd, LatticeVec{2, 1, 0}) == 4);
  CHECK(rd.is_dominant(LatticeVec{2, 1, 0}));
  CHECK_FALSE(rd.is_dominant(LatticeVec{0, 1, 0}));
  CHECK_THROWS_AS(DominantCocharacter(rd, LatticeVec{0, 1, 0}), std::invalid_argument);
  const DominantCocharacter a(rd, LatticeVec{2, 0, 0}), b(rd, LatticeVec{1, 1, 0});
  CHECK(dominance_leq(rd, b, a));
  CHECK_FALSE(dominance_leq(rd, a, b));
}

TEST_CASE("bad group names are rejected") {
  CHECK_THROWS(parse_group("XX(2)"));
  CHECK_THROWS(parse_group("GL(0)"));
  CHECK_THROWS(parse_group("GL(2"));
}
