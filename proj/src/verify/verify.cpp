#include "satake/verify.hpp"

#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "satake/errors.hpp"
#include "satake/oracles.hpp"

namespace satake::verify {

namespace {

struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failed++ == 0) first_failure = what;
  }
};

template <class F>
CheckResult run(int id, const char* name, F&& body) {
  CheckResult r{id, name, false, "", 0};
  const auto start = std::chrono::steady_clock::now();
  try {
    Tally t;
    body(t);
    r.passed = t.failed == 0;
    std::ostringstream os;
    os << t.checked << " checked, " << t.failed << " failed";
    if (t.failed) os << "; first: " << t.first_failure;
    r.detail = os.str();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("aborted: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

SphericalHecke::Options engine_options(const Config& config) {
  SphericalHecke::Options o;
  o.sign = config.sign;
  o.corrupt_q_analog = config.corrupt_q_analog;
  return o;
}

std::string pair_label(const std::string& group, const LatticeVec& a, const LatticeVec& b) {
  return group + " " + format_vec(a) + "*" + format_vec(b);
}

}  // namespace

const std::vector<std::string>& catalog_sample() {
  static const std::vector<std::string> groups{"GL(1)", "GL(2)",  "GL(3)",    "SL(2)",       "SL(3)", "SL(4)",
                                               "PGL(2)", "PGL(3)", "Sp(4)", "torus(1)", "GL(2)xSL(2)"};
  return groups;
}

std::vector<DominantCocharacter> sweep(const RootDatum& rd, std::int64_t bound) {
  return dominant_cocharacters(rd, bound, 1);
}

CheckResult quadratic_relation(const Config& config) {
  return run(1, "Iwahori quadratic relation", [&](Tally& t) {
    for (const auto& g : config.groups) {
      SphericalHecke H(parse_group(g), engine_options(config));
      const IwahoriHecke& A = H.iwahori();
      for (std::size_t i = 0; i < H.affine().num_simple(); ++i) {
        const HeckeElement s = A.T(H.affine().simple_reflection(i));
        const HeckeElement expected = s.scaled(LaurentPoly::q() - 1) + A.unit().scaled(LaurentPoly::q());
        t.record(A.multiply(s, s) == expected, g + " generator " + std::to_string(i));
      }
    }
  });
}

namespace {

AffineWeylElement random_element(const AffineWeylGroup& W, const std::vector<AffineWeylElement>& omega,
                                 std::size_t max_length, std::mt19937_64& rng) {
  std::vector<std::size_t> word(std::uniform_int_distribution<std::size_t>(0, max_length)(rng));
  if (W.num_simple() == 0) word.clear();
  for (auto& i : word) i = std::uniform_int_distribution<std::size_t>(0, W.num_simple() - 1)(rng);
  const AffineWeylElement& w = omega[std::uniform_int_distribution<std::size_t>(0, omega.size() - 1)(rng)];
  return W.multiply(W.evaluate(word), w);
}

}  // namespace

CheckResult hecke_associativity(const Config& config) {
  return run(2, "Hecke associativity", [&](Tally& t) {
    for (std::size_t gi = 0; gi < config.groups.size(); ++gi) {
      const std::string& g = config.groups[gi];
      SphericalHecke H(parse_group(g), engine_options(config));
      const AffineWeylGroup& W = H.affine();
      const IwahoriHecke& A = H.iwahori();
      const auto omega = W.omega_elements(1);
      std::mt19937_64 rng(config.seed * 1000003 + gi);
      for (std::size_t k = 0; k < config.random_triples; ++k) {
        const auto a = A.T(random_element(W, omega, config.max_triple_length, rng));
        const auto b = A.T(random_element(W, omega, config.max_triple_length, rng));
        const auto c = A.T(random_element(W, omega, config.max_triple_length, rng));
        t.record(A.multiply(A.multiply(a, b), c) == A.multiply(a, A.multiply(b, c)),
                 g + " triple " + std::to_string(k));
      }
    }
  });
}

CheckResult cross_path(const Config& config, CheckResult* weight) {
  std::vector<ConvolutionRecord> log;
  std::vector<std::string> log_group;
  CheckResult r = run(3, "cross-path oracle equality", [&](Tally& t) {
    for (const auto& g : config.groups) {
      const RootDatum rd = parse_group(g);
      SphericalHecke H(rd, engine_options(config));
      const auto mus = sweep(rd, config.bound);
      for (const auto& mu : mus) {
        for (const auto& lam : mus) {
          if (d_pairing(rd, mu) + d_pairing(rd, lam) > config.bound) continue;
          const bool ok = H.spherical_mul_iwahori_path(mu, lam) == H.spherical_mul_satake_path(mu, lam, &log);
          log_group.resize(log.size(), g);
          t.record(ok, pair_label(g, mu.value(), lam.value()));
        }
      }
    }
  });
  if (weight) {
    *weight = run(11, "weight additivity", [&](Tally& t) {
      for (std::size_t k = 0; k < log.size(); ++k) {
        const RootDatum rd = parse_group(log_group[k]);
        const auto& rec = log[k];
        const std::int64_t expected = purity_weight(rd, rec.a) + purity_weight(rd, rec.b);
        for (const auto& [z, n] : rec.product) {
          t.record(purity_weight(rd, z) == expected, log_group[k] + " " + format_ic(rec.a) + "*" + format_ic(rec.b) +
                                                         " -> " + format_ic(z));
        }
      }
    });
  }
  return r;
}

namespace {

// Class of std (x) Sym^m of GL_2, decomposed on GL_2 weights (a, b) by
// peeling off highest weights; (a, b) with a >= b is Sym^{a-b} (x) det^b,
// whose G^_1 key is (a - b, -(a + b)).
G1RingElement gl2_std_times_sym(std::int64_t m) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> weights;
  for (std::int64_t i = 0; i <= m; ++i) {
    weights[{m - i + 1, i}] += 1;
    weights[{m - i, i + 1}] += 1;
  }
  G1RingElement out;
  while (!weights.empty()) {
    auto top = weights.begin();
    for (auto it = weights.begin(); it != weights.end(); ++it)
      if (it->first.first - it->first.second > top->first.first - top->first.second) top = it;
    const auto [a, b] = top->first;
    const std::int64_t n = top->second;
    out.add_term(G1RepClass{{a - b}, -(a + b)}, LaurentPoly(static_cast<long long>(n)));
    for (std::int64_t i = 0; i <= a - b; ++i) {
      auto it = weights.find({a - i, b + i});
      if (it == weights.end() || it->second < n) throw InternalError("GL2 weight model underflow");
      if ((it->second -= n) == 0) weights.erase(it);
    }
  }
  return out;
}

}  // namespace

CheckResult satake_table(const Config& config) {
  return run(4, "Satake table", [&](Tally& t) {
    for (const auto& g : config.groups) {
      const RootDatum rd = parse_group(g);
      SphericalHecke H(rd, engine_options(config));
      const RepRing& R = H.rep();
      const bool pgl2 = rd.rank() == 1 && rd.semisimple_rank() == 1 && rd.pi1_order() == 2;
      for (const auto& mu : sweep(rd, config.bound)) {
        const SatakeFunction f = H.ic_function(mu);
        const G1RingElement image = H.satake_transform(f);
        t.record(image == quotient_normal_form(G1RingElement::basis(R.key_of(mu, 0))),
                 g + " f_IC" + format_vec(mu.value()));
        t.record(H.inverse_satake_transform(image) == f, g + " round trip " + format_vec(mu.value()));
        if (pgl2) {
          // Sym^m of the standard representation of GL_2: weights (a, m - a).
          // On the torus of G^_1 the weight (a, b) is (a - b, -(a + b)).
          const std::int64_t m = mu.value()[0];
          Character sym;
          for (std::int64_t a = 0; a <= m; ++a) sym[LatticeVec{a - (m - a)}] += 1;
          t.record(sym == R.character(mu), "PGL(2) Sym character " + std::to_string(m));
          const G1RingElement sym_class = G1RingElement::basis(G1RepClass{mu.value(), -m});
          t.record(image == quotient_normal_form(sym_class), "PGL(2) Sym class " + std::to_string(m));
          if (d_pairing(rd, mu) + 1 <= config.bound) {
            // std * Sym^m in the GL_2 weight model against the Iwahori-path product.
            const SatakeFunction product = H.multiply_iwahori(H.ic_function(H.dominant({1})), f);
            t.record(H.satake_transform(product) == quotient_normal_form(gl2_std_times_sym(m)),
                     "PGL(2) std*Sym " + std::to_string(m));
          }
        }
      }
    }
  });
}

CheckResult kernel_relation(const Config& config) {
  return run(5, "kernel relation", [&](Tally& t) {
    for (const auto& g : config.groups) {
      const RootDatum rd = parse_group(g);
      SphericalHecke H(rd, engine_options(config));
      const DominantCocharacter zero = H.dominant(zero_vec(rd.rank()));
      const SatakeFunction twisted = trace_to_hecke(H, K0Element::basis({zero.value(), -1}));
      const SatakeFunction plain = trace_to_hecke(H, K0Element::basis({zero.value(), 0}));
      t.record((twisted - plain.scaled(LaurentPoly::q())).is_zero(), g + " IC_0(-1) - q IC_0");
      t.record(twisted == H.c(zero).scaled(LaurentPoly::q()), g + " trace IC_0(-1) = q c_0");
      t.record(plain == H.c(zero), g + " trace of the unit");
      t.record(H.satake_transform(twisted) ==
                   quotient_normal_form(G1RingElement::basis(H.rep().g1_class(zero.value(), -2))),
               g + " image of [d^-1]");
    }
  });
}

CheckResult trace_identity(const Config& config) {
  return run(6, "convolution trace identity", [&](Tally& t) {
    for (const auto& g : config.groups) {
      const RootDatum rd = parse_group(g);
      SphericalHecke H(rd, engine_options(config));
      if (g == "GL(2)") {
        const ICClass a{{1, 0}, 0};
        K0Element expected;
        expected.add_term({{2, 0}, 0}, 1);
        expected.add_term({{1, 1}, -1}, 1);
        t.record(convolve_ic(H.rep(), a, a) == expected, "GL(2) (1,0)*(1,0)");
      }
      const auto mus = sweep(rd, config.bound);
      for (const auto& mu : mus) {
        for (const auto& lam : mus) {
          if (d_pairing(rd, mu) + d_pairing(rd, lam) > config.bound) continue;
          const ICClass a{mu.value(), 0};
          const ICClass b{lam.value(), -1};
          const SatakeFunction lhs = trace_to_hecke(H, convolve_ic(H.rep(), a, b));
          const SatakeFunction rhs =
              H.multiply_iwahori(trace_to_hecke(H, K0Element::basis(a)), trace_to_hecke(H, K0Element::basis(b)));
          t.record(lhs == rhs, pair_label(g, mu.value(), lam.value()));
        }
      }
    }
  });
}

CheckResult q_specialization(const Config& config) {
  return run(7, "q=1 specialization", [&](Tally& t) {
    for (const auto& g : config.groups) {
      const RootDatum rd = parse_group(g);
      SphericalHecke H(rd, engine_options(config));
      for (const auto& mu : sweep(rd, config.bound)) {
        const auto expected = oracle::freudenthal(rd, mu.value());
        const auto weights = H.rep().dominant_weights(mu);
        t.record(weights.size() == expected.size(), g + " dominant weights of " + format_vec(mu.value()));
        for (const auto& [lam, m] : expected) {
          const BigInt at_one = H.rep().lusztig_q_analog(mu, lam).eval_at_one();
          t.record(at_one == m, g + " m" + format_vec(mu.value()) + "^" + format_vec(lam));
        }
      }
    }
  });
}

CheckResult parity_positivity(const Config& config) {
  return run(8, "parity/positivity", [&](Tally& t) {
    for (const auto& g : config.groups) {
      const RootDatum rd = parse_group(g);
      SphericalHecke H(rd, engine_options(config));
      for (const auto& mu : sweep(rd, config.bound)) {
        for (const auto& row : parity_report(H, mu).rows) {
          t.record(row.polynomial && row.nonnegative,
                   g + " h" + format_vec(mu.value()) + "," + format_vec(row.lam) + " = " + row.h.str());
        }
      }
    }
  });
}

CheckResult dual_table(const Config&) {
  return run(9, "dual-group table", [&](Tally& t) {
    const RootDatum pgl2 = parse_group("PGL(2)");
    t.record(equivalent(dual(pgl2), parse_group("SL(2)")), "dual(PGL(2)) = SL(2)");
    const G1Data pg = g1_data(pgl2);
    t.record(!pg.epsilon_trivial && !pg.direct_product && pg.structure.find("GL₂") != std::string::npos,
             "PGL(2) G1 = GL2");
    const G1Data sl = g1_data(parse_group("SL(2)"));
    t.record(sl.epsilon_trivial && sl.direct_product, "SL(2) direct product");
    for (int n = 1; n <= 5; ++n) {
      const RootDatum gl = catalog("GL", std::vector<int>{n});
      // 2 rho = (n-1, n-3, ..., 1-n); eps(e_i) = (-1)^{n+1-2i}.
      bool brute_trivial = true;
      for (int i = 1; i <= n; ++i) brute_trivial = brute_trivial && (n + 1 - 2 * i) % 2 == 0;
      const G1Data d = g1_data(gl);
      t.record(d.epsilon_trivial == brute_trivial && brute_trivial == (n % 2 == 1) &&
                   d.direct_product == d.epsilon_trivial,
               "GL(" + std::to_string(n) + ") epsilon");
    }
  });
}

CheckResult length_law(const Config& config) {
  return run(10, "length law", [&](Tally& t) {
    for (const auto& g : config.groups) {
      const RootDatum rd = parse_group(g);
      AffineWeylGroup W(rd);
      for (const auto& mu : sweep(rd, config.bound)) {
        const std::size_t l = W.length(W.translation(mu.value()));
        t.record(static_cast<std::int64_t>(l) == oracle::d_by_summation(rd, mu.value()) &&
                     static_cast<std::int64_t>(l) == d_pairing(rd, mu),
                 g + " t" + format_vec(mu.value()));
      }
    }
  });
}

std::vector<CheckResult> run_all(const Config& config) {
  std::vector<CheckResult> out;
  out.push_back(quadratic_relation(config));
  out.push_back(hecke_associativity(config));
  CheckResult weight;
  out.push_back(cross_path(config, &weight));
  out.push_back(satake_table(config));
  out.push_back(kernel_relation(config));
  out.push_back(trace_identity(config));
  out.push_back(q_specialization(config));
  out.push_back(parity_positivity(config));
  out.push_back(dual_table(config));
  out.push_back(length_law(config));
  out.push_back(weight);
  return out;
}

std::string format_line(const CheckResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail;
  return os.str();
}

nlohmann::ordered_json to_json(const std::vector<CheckResult>& results) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  bool all = true;
  for (const auto& r : results) {
    checks.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    all = all && r.passed;
  }
  return {{"passed", all}, {"checks", std::move(checks)}};
}

}  // namespace satake::verify
