#include <random>

#include "doctest.h"
#include "satake/hecke.hpp"

using namespace satake;

namespace {

const LaurentPoly q = LaurentPoly::q();

}  // namespace

TEST_CASE("quadratic relation and Poincare polynomial") {
  const AffineWeylGroup W(parse_group("SL(3)"));
  const IwahoriHecke A(W);
  for (std::size_t i = 0; i < W.num_simple(); ++i) {
    const HeckeElement Ts = A.T(W.simple_reflection(i));
    CHECK(A.multiply(Ts, Ts) == Ts.scaled(q - 1) + A.unit().scaled(q));
  }
  CHECK(A.poincare() == (1 + q) * (1 + q + q * q));
  CHECK(A.format(A.multiply(A.T(W.simple_reflection(0)), A.T(W.simple_reflection(0)))) ==
        "q*T[e] + (-1 + q)*T[s1]");
}

TEST_CASE("PGL2 spherical algebra is the tree Hecke algebra") {
  const RootDatum rd = parse_group("PGL(2)");
  const SphericalHecke H(rd);
  auto c = [&](std::int64_t n) { return H.c(H.dominant({n})); };
  CHECK(H.multiply_iwahori(c(1), c(1)) == c(2) + c(0).scaled(1 + q));
  CHECK(H.multiply(c(1), c(1)) == c(2) + c(0).scaled(1 + q));
  for (std::int64_t n = 2; n <= 6; ++n) {
    CHECK(H.multiply_iwahori(c(1), c(n)) == c(n + 1) + c(n - 1).scaled(q));
    CHECK(H.multiply(c(1), c(n)) == c(n + 1) + c(n - 1).scaled(q));
  }
}

TEST_CASE("PGL2 IC functions") {
  const RootDatum rd = parse_group("PGL(2)");
  const SphericalHecke H(rd);
  SphericalHecke::Options signed_opts;
  signed_opts.sign = SignConvention::Signed;
  const SphericalHecke S(rd, signed_opts);
  for (std::int64_t n = 0; n <= 7; ++n) {
    SatakeFunction expected;
    for (std::int64_t k = n; k >= 0; k -= 2) expected.add_term(H.dominant({k}), 1);
    CHECK(H.ic_function(H.dominant({n})) == expected);
    CHECK(S.ic_function(S.dominant({n})) == expected.scaled(n % 2 ? -1 : 1));
    CHECK(H.ic_function(H.dominant({n}), -1) == expected.scaled(q));
  }
  CHECK(H.format(H.multiply(H.c(H.dominant({1})), H.c(H.dominant({1})))) == "(1 + q)*c[(0)] + c[(2)]");
}

TEST_CASE("spherical algebra is commutative and both products agree") {
  for (const char* g : {"SL(3)", "Sp(4)", "GL(2)"}) {
    const RootDatum rd = parse_group(g);
    const SphericalHecke H(rd);
    const auto mus = dominant_cocharacters(rd, 4);
    for (const auto& a : mus) {
      for (const auto& b : mus) {
        const SatakeFunction ab = H.multiply_iwahori(H.c(a), H.c(b));
        CHECK(ab == H.multiply_iwahori(H.c(b), H.c(a)));
        CHECK(ab == H.multiply(H.c(a), H.c(b)));
      }
    }
  }
}

TEST_CASE("Satake transform is a ring isomorphism for both sign conventions") {
  for (SignConvention sign : {SignConvention::Unsigned, SignConvention::Signed}) {
    for (const char* g : {"PGL(2)", "GL(2)", "SL(3)"}) {
      const RootDatum rd = parse_group(g);
      SphericalHecke::Options opts;
      opts.sign = sign;
      const SphericalHecke H(rd, opts);
      const auto mus = dominant_cocharacters(rd, 4);
      for (const auto& a : mus) {
        const SatakeFunction fa = H.ic_function(a, 1) + H.c(a).scaled(q);
        CHECK(H.inverse_satake_transform(H.satake_transform(fa)) == fa);
        for (const auto& b : mus) {
          const SatakeFunction fb = H.c(b);
          CHECK(H.satake_transform(H.multiply_iwahori(fa, fb)) ==
                quotient_normal_form(H.rep().g1_mul(H.satake_transform(fa), H.satake_transform(fb))));
        }
      }
    }
  }
}

TEST_CASE("IC functions are unitriangular") {
  for (const char* g : {"SL(3)", "PGL(3)", "Sp(4)", "GL(3)"}) {
    const RootDatum rd = parse_group(g);
    const SphericalHecke H(rd);
    for (const auto& mu : dominant_cocharacters(rd, 6)) {
      const SatakeFunction f = H.ic_function(mu);
      CHECK(f.coeff(mu) == LaurentPoly(1));
      for (const auto& [lam, h] : f) {
        CHECK(dominance_leq(rd, lam, mu));
        CHECK(h.is_polynomial());
        CHECK(h.has_nonnegative_coefficients());
      }
      CHECK(H.to_ic(f) == IcExpansion::basis(mu));
      CHECK(H.from_ic(IcExpansion::basis(mu)) == f);
    }
  }
}

TEST_CASE("minimal scalar ring") {
  const SphericalHecke H(parse_group("PGL(2)"));
  const auto c0 = H.c(H.dominant({0}));
  CHECK(minimal_scalar_ring(c0) == "Z");
  CHECK(minimal_scalar_ring(c0.scaled(q)) == "Z[q]");
  CHECK(minimal_scalar_ring(c0.scaled(LaurentPoly::q_power(-1))) == "Z[q^-1]");
  CHECK(minimal_scalar_ring(c0.scaled(q + LaurentPoly::q_power(-1))) == "Z[q,q^-1]");
}

TEST_CASE("Hecke associativity on random triples") {
  const AffineWeylGroup W(parse_group("PGL(3)"));
  const IwahoriHecke A(W);
  const auto omegas = W.omega_elements(1);
  std::mt19937_64 rng(9);
  auto random_t = [&] {
    std::vector<std::size_t> word(rng() % 5);
    for (auto& s : word) s = rng() % W.num_simple();
    return A.T(W.multiply(W.evaluate(word), omegas[rng() % omegas.size()]));
  };
  for (int t = 0; t < 60; ++t) {
    const HeckeElement a = random_t(), b = random_t(), c = random_t();
    CHECK(A.multiply(A.multiply(a, b), c) == A.multiply(a, A.multiply(b, c)));
  }
}
