#include "doctest.h"
#include "satake/hecke.hpp"
#include "satake/satake_k0.hpp"

using namespace satake;

TEST_CASE("GL2 standard squared in K0") {
  const RootDatum rd = parse_group("GL(2)");
  const RepRing R(rd);
  const ICClass std1{{1, 0}, 0};
  K0Element expected;
  expected.add_term(ICClass{{1, 1}, -1}, 1);
  expected.add_term(ICClass{{2, 0}, 0}, 1);
  CHECK(convolve_ic(R, std1, std1) == expected);
  CHECK(format_k0(expected) == "IC[(1,1)](-1) + IC[(2,0)](0)");
}

TEST_CASE("convolution is commutative, associative and weight additive") {
  for (const char* g : {"GL(2)", "SL(3)", "Sp(4)"}) {
    const RootDatum rd = parse_group(g);
    const RepRing R(rd);
    std::vector<ICClass> gens;
    std::int64_t n = -1;
    for (const auto& mu : dominant_cocharacters(rd, 4)) gens.push_back({mu.value(), n++ % 3});
    for (const auto& a : gens) {
      for (const auto& b : gens) {
        const K0Element ab = convolve_ic(R, a, b);
        CHECK(ab == convolve_ic(R, b, a));
        for (const auto& [z, c] : ab) {
          CHECK(c > 0);
          CHECK(purity_weight(rd, z) == purity_weight(rd, a) + purity_weight(rd, b));
        }
      }
    }
    for (std::size_t i = 0; i + 2 < gens.size(); ++i) {
      const K0Element a = K0Element::basis(gens[i]), b = K0Element::basis(gens[i + 1]),
                      c = K0Element::basis(gens[i + 2]);
      CHECK(convolve(R, convolve(R, a, b), c) == convolve(R, a, convolve(R, b, c)));
    }
  }
}

TEST_CASE("trace of a convolution is the Hecke product of traces") {
  for (const char* g : {"GL(2)", "PGL(2)", "SL(3)"}) {
    const RootDatum rd = parse_group(g);
    const SphericalHecke H(rd);
    const auto mus = dominant_cocharacters(rd, 4);
    for (const auto& a : mus) {
      for (const auto& b : mus) {
        const ICClass x{a.value(), 0}, y{b.value(), -1};
        const SatakeFunction lhs = trace_to_hecke(H, convolve_ic(H.rep(), x, y));
        CHECK(lhs == H.multiply_iwahori(H.ic_function(a, 0), H.ic_function(b, -1)));
      }
    }
  }
}

TEST_CASE("purity weight and parity") {
  const RootDatum rd = parse_group("PGL(2)");
  CHECK(purity_weight(rd, ICClass{{3}, 0}) == 3);
  CHECK(purity_weight(rd, ICClass{{3}, -1}) == 5);
  CHECK(parity(rd, ICClass{{3}, 0}) == 1);
  CHECK(parity(rd, ICClass{{2}, 5}) == 0);
  CHECK(format_ic(ICClass{{1}, -1}) == "IC[(1)](-1)");
}

TEST_CASE("parity report") {
  const RootDatum rd = parse_group("Sp(4)");
  const SphericalHecke H(rd);
  for (const auto& mu : dominant_cocharacters(rd, 8)) {
    const ParityReport rep = parity_report(H, mu);
    CHECK(rep.violations == 0);
    CHECK(rep.rows.size() == H.ic_function(mu).size());
  }
}
