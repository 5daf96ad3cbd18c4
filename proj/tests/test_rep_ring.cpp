#include <random>

#include "doctest.h"
#include "satake/oracles.hpp"
#include "satake/rep_ring.hpp"

using namespace satake;

namespace {

DominantCocharacter highest_coroot(const RootDatum& rd) {
  LatticeVec best = rd.positive_coroots().front();
  for (const auto& b : rd.positive_coroots())
    if (d_pairing(rd, b) > d_pairing(rd, best)) best = b;
  return DominantCocharacter(rd, best);
}

LatticeVec coroot_combination(const RootDatum& rd, const std::vector<std::int64_t>& c) {
  LatticeVec v = zero_vec(rd.rank());
  for (std::size_t i = 0; i < c.size(); ++i) v = v + scaled(rd.simple_coroots()[i], c[i]);
  return v;
}

}  // namespace

TEST_CASE("q-Kostant partition function of A2") {
  const RootDatum rd = parse_group("SL(3)");
  const RepRing R(rd);
  const LaurentPoly q = LaurentPoly::q();
  CHECK(R.kostant_partition(coroot_combination(rd, {1, 1})) == q + q * q);
  CHECK(R.kostant_partition(coroot_combination(rd, {1, -1})) == LaurentPoly());
  CHECK(R.kostant_partition(zero_vec(rd.rank())) == LaurentPoly(1));
  // Partitions of n1 a1 + n2 a2 into a1, a2, a1 + a2: one for each number
  // k <= min(n1, n2) of copies of a1 + a2, with n1 + n2 - k parts.
  for (std::int64_t n1 = 0; n1 <= 5; ++n1) {
    for (std::int64_t n2 = 0; n2 <= 5; ++n2) {
      LaurentPoly expected;
      for (std::int64_t k = 0; k <= std::min(n1, n2); ++k) expected += LaurentPoly::q_power(n1 + n2 - k);
      const LatticeVec v = coroot_combination(rd, {n1, n2});
      CHECK(R.kostant_partition(v) == expected);
      CHECK(R.kostant_partition(v, false) == LaurentPoly(std::min(n1, n2) + 1));
    }
  }
}

TEST_CASE("zero weight of the adjoint representation gives the exponents") {
  const LaurentPoly q = LaurentPoly::q();
  struct Case {
    const char* group;
    LaurentPoly expected;
  };
  for (const Case& c : {Case{"PGL(2)", q}, Case{"SL(2)", q}, Case{"PGL(3)", q + q * q}, Case{"SL(3)", q + q * q},
                        Case{"SL(4)", q + q * q + q * q * q}, Case{"Sp(4)", q + q * q * q}}) {
    CAPTURE(c.group);
    const RootDatum rd = parse_group(c.group);
    const RepRing R(rd);
    CHECK(R.lusztig_q_analog(highest_coroot(rd), zero_vec(rd.rank())) == c.expected);
  }
}

TEST_CASE("PGL3 adjoint representation") {
  const RootDatum rd = parse_group("PGL(3)");
  const RepRing R(rd);
  const DominantCocharacter theta = highest_coroot(rd);
  CHECK(R.weyl_dim(theta) == 8);
  CHECK(R.weight_multiplicity(theta, zero_vec(rd.rank())) == 2);
  CHECK(R.weight_multiplicity(theta, theta.value()) == 1);
}

TEST_CASE("GL2 standard squared") {
  const RootDatum rd = parse_group("GL(2)");
  const RepRing R(rd);
  const DominantCocharacter std1(rd, {1, 0});
  const TensorDecomposition t = R.tensor_decompose(std1, std1);
  CHECK(t == TensorDecomposition{{LatticeVec{1, 1}, 1}, {LatticeVec{2, 0}, 1}});
}

TEST_CASE("weight multiplicities agree with Freudenthal and Weyl") {
  for (const char* g : {"SL(3)", "PGL(3)", "Sp(4)", "SL(4)", "GL(3)"}) {
    const RootDatum rd = parse_group(g);
    const RepRing R(rd);
    for (const auto& mu : dominant_cocharacters(rd, 8)) {
      CAPTURE(format_vec(mu.value()));
      CHECK(R.weyl_dim(mu) == oracle::weyl_dimension(rd, mu.value()));
      const auto fr = oracle::freudenthal(rd, mu.value());
      const auto doms = R.dominant_weights(mu);
      CHECK(doms.size() == fr.size());
      for (const auto& [lam, m] : fr) {
        CHECK(R.weight_multiplicity(mu, lam) == m);
        CHECK(R.lusztig_q_analog(mu, lam).eval_at_one() == m);
      }
    }
  }
}

TEST_CASE("tensor products agree with Brauer-Klimyk") {
  for (const char* g : {"SL(3)", "Sp(4)", "GL(2)", "PGL(3)"}) {
    const RootDatum rd = parse_group(g);
    const RepRing R(rd);
    const auto mus = dominant_cocharacters(rd, 4);
    for (const auto& a : mus) {
      for (const auto& b : mus) CHECK(R.tensor_decompose(a, b) == oracle::racah_speiser(rd, a.value(), b.value()));
    }
  }
}

TEST_CASE("q-analog fault injection changes a known value") {
  const RootDatum rd = parse_group("PGL(2)");
  const DominantCocharacter two(rd, {2});
  CHECK(RepRing(rd).lusztig_q_analog(two, {0}) == LaurentPoly::q());
  RepRing::Options bad;
  bad.corrupt_q_analog = true;
  CHECK(RepRing(rd, bad).lusztig_q_analog(two, {0}) != LaurentPoly::q());
}

TEST_CASE("modified dual group ring") {
  const RootDatum rd = parse_group("SL(3)");
  const RepRing R(rd);
  const auto mus = dominant_cocharacters(rd, 4);
  std::mt19937_64 rng(3);
  auto random_element = [&] {
    G1RingElement x;
    for (int i = 0; i < 2; ++i) {
      const auto& mu = mus[rng() % mus.size()];
      const std::int64_t n = std::int64_t(rng() % 5) - 2;
      x.add_term(R.key_of(mu, n), LaurentPoly::q_power(std::int64_t(rng() % 3) - 1) * (1 + std::int64_t(rng() % 2)));
    }
    return x;
  };
  for (int t = 0; t < 25; ++t) {
    const G1RingElement a = random_element(), b = random_element(), c = random_element();
    CHECK(R.g1_mul(R.g1_mul(a, b), c) == R.g1_mul(a, R.g1_mul(b, c)));
    CHECK(R.g1_mul(a, b) == R.g1_mul(b, a));
    CHECK(quotient_normal_form(R.g1_mul(a, b)) ==
          quotient_normal_form(R.g1_mul(quotient_normal_form(a), quotient_normal_form(b))));
  }
  CHECK_THROWS(R.g1_class(mus.back().value(), d_pairing(rd, mus.back()) + 1));
  const G1RepClass k = R.key_of(DominantCocharacter(rd, zero_vec(rd.rank())), -1);
  CHECK(quotient_normal_form(G1RingElement::basis(k)) ==
        G1RingElement::basis(G1RepClass{zero_vec(rd.rank()), 0}, LaurentPoly::q()));
}
