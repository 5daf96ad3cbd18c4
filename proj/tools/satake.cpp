#include <algorithm>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "satake/errors.hpp"
#include "satake/hecke.hpp"
#include "satake/verify.hpp"

using namespace satake;
using json = nlohmann::ordered_json;

namespace {

struct RunConfig {
  std::string group = "PGL(2)";
  std::int64_t bound = 6;
  bool signed_trace = false;
  bool json = false;
  std::uint64_t seed = 1;
};

SphericalHecke::Options engine_options(const RunConfig& cfg) {
  SphericalHecke::Options o;
  o.sign = cfg.signed_trace ? SignConvention::Signed : SignConvention::Unsigned;
  return o;
}

// Left-aligned text table; widths count code points so UTF-8 cells line up.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& os) const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], display_width(r[i]));
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      std::string line;
      for (std::size_t i = 0; i < rows_[k].size(); ++i) {
        line += rows_[k][i];
        if (i + 1 < rows_[k].size()) line += std::string(width[i] - display_width(rows_[k][i]) + 2, ' ');
      }
      os << line << "\n";
      if (k == 0) {
        std::size_t total = 0;
        for (auto w : width) total += w + 2;
        os << std::string(total - 2, '-') << "\n";
      }
    }
  }

 private:
  static std::size_t display_width(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s) n += (c & 0xC0) != 0x80;
    return n;
  }
  std::vector<std::vector<std::string>> rows_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string pi1_text(const RootDatum& rd) {
  std::string out;
  for (auto d : rd.pi1_torsion()) {
    if (d == 1) continue;
    out += (out.empty() ? "" : " x ") + std::string("Z/") + std::to_string(d);
  }
  for (std::size_t i = 0; i < rd.pi1_free_rank(); ++i) out += (out.empty() ? "" : " x ") + std::string("Z");
  return out.empty() ? "trivial" : out;
}

std::string vec_list(const std::vector<LatticeVec>& vs) {
  if (vs.empty()) return "none";
  std::string out;
  for (const auto& v : vs) out += (out.empty() ? "" : " ") + format_vec(v);
  return out;
}

json vec_list_json(const std::vector<LatticeVec>& vs) {
  json j = json::array();
  for (const auto& v : vs) j.push_back(vec_to_json(v));
  return j;
}

int cmd_describe(const RunConfig& cfg) {
  const RootDatum rd = parse_group(cfg.group);
  const RootDatum d = dual(rd);
  const G1Data g1 = g1_data(rd);
  const FiniteWeylGroup w0(rd);
  if (cfg.json) {
    json j;
    j["group"] = cfg.group;
    j["datum"] = to_json(rd);
    j["dual"] = to_json(d);
    j["cartan_matrix"] = rd.cartan_matrix().to_json();
    j["positive_roots"] = vec_list_json(rd.positive_roots());
    j["positive_coroots"] = vec_list_json(rd.positive_coroots());
    j["two_rho"] = vec_to_json(rd.two_rho());
    j["weyl_order"] = w0.size();
    j["pi1"] = {{"torsion", rd.pi1_torsion()}, {"free_rank", rd.pi1_free_rank()}, {"order", rd.pi1_order()}};
    j["epsilon_trivial"] = g1.epsilon_trivial;
    j["direct_product"] = g1.direct_product;
    j["g1_structure"] = g1.structure;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "group:            " << cfg.group << "\n"
            << "rank:             " << rd.rank() << "\n"
            << "pairing matrix:   " << rd.pairing_matrix().str() << "\n"
            << "simple roots:     " << vec_list(rd.simple_roots()) << "\n"
            << "simple coroots:   " << vec_list(rd.simple_coroots()) << "\n"
            << "positive roots:   " << vec_list(rd.positive_roots()) << "\n"
            << "positive coroots: " << vec_list(rd.positive_coroots()) << "\n"
            << "cartan matrix:    " << (rd.semisimple_rank() ? rd.cartan_matrix().str() : "none") << "\n"
            << "2rho:             " << format_vec(rd.two_rho()) << "\n"
            << "|W0|:             " << w0.size() << "\n"
            << "pi1:              " << pi1_text(rd) << "\n"
            << "dual group:       " << d.name() << ", simple roots " << vec_list(d.simple_roots()) << "\n"
            << "epsilon trivial:  " << yes_no(g1.epsilon_trivial) << "\n"
            << g1.structure << "\n";
  return 0;
}

// Factor syntax: `e`, `s`, `s1s0`, `s0.2`, `t[1,0]`, `t[1,0]s1`.
AffineWeylElement parse_factor(const AffineWeylGroup& W, const std::string& text) {
  AffineWeylElement x = W.identity();
  std::size_t pos = 0;
  if (text.rfind("t[", 0) == 0) {
    const std::size_t close = text.find(']');
    if (close == std::string::npos) throw std::invalid_argument("unterminated translation in " + text);
    x = W.translation(parse_vec(text.substr(2, close - 2)));
    pos = close + 1;
    if (pos < text.size() && (text[pos] == '.' || text.compare(pos, 2, "·") == 0)) pos += text[pos] == '.' ? 1 : 2;
  }
  if (text.substr(pos) == "e" || pos == text.size()) return x;
  const std::size_t r = W.datum().semisimple_rank();
  while (pos < text.size()) {
    if (text[pos] != 's') throw std::invalid_argument("bad factor '" + text + "'");
    ++pos;
    std::size_t end = pos;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    std::size_t index = 0;
    if (end == pos) {
      index = 0;  // bare `s` is s1
    } else {
      const std::size_t k = std::stoul(text.substr(pos, end - pos));
      if (k == 0) {
        std::size_t component = 1;
        if (end < text.size() && text[end] == '.') {
          std::size_t e2 = end + 1;
          while (e2 < text.size() && std::isdigit(static_cast<unsigned char>(text[e2]))) ++e2;
          component = std::stoul(text.substr(end + 1, e2 - end - 1));
          end = e2;
        }
        index = r + component - 1;
      } else {
        index = k - 1;
        if (index >= r) throw std::invalid_argument("no finite simple reflection s" + std::to_string(k));
      }
    }
    if (index >= W.num_simple()) throw std::invalid_argument("no simple reflection for '" + text + "'");
    x = W.right_simple(x, index);
    pos = end;
  }
  return x;
}

HeckeElement evaluate_expression(const IwahoriHecke& A, const std::string& expr) {
  HeckeElement h = A.unit();
  std::size_t start = 0;
  for (;;) {
    const std::size_t star = expr.find('*', start);
    const std::string factor = expr.substr(start, star == std::string::npos ? std::string::npos : star - start);
    h = A.multiply(h, A.T(parse_factor(A.group(), factor)));
    if (star == std::string::npos) break;
    start = star + 1;
  }
  return h;
}

int cmd_hecke_mul(const RunConfig& cfg, const std::vector<std::string>& exprs, std::size_t triples) {
  SphericalHecke H(parse_group(cfg.group), engine_options(cfg));
  const IwahoriHecke& A = H.iwahori();
  json products = json::array();
  Table table({"product", "result"});
  for (const auto& e : exprs) {
    const HeckeElement h = evaluate_expression(A, e);
    products.push_back({{"expr", e}, {"result", A.to_json(h)}});
    table.add({e, A.format(h)});
  }
  bool assoc_ok = true;
  if (triples > 0) {
    verify::Config vc;
    vc.groups = {cfg.group};
    vc.seed = cfg.seed;
    vc.random_triples = triples;
    const verify::CheckResult r = verify::hecke_associativity(vc);
    assoc_ok = r.passed;
    if (!cfg.json) {
      if (!exprs.empty()) table.print(std::cout);
      std::cout << "associativity: " << (r.passed ? "PASS" : "FAIL") << " (" << r.detail << ")\n";
      return r.passed ? 0 : 1;
    }
  }
  if (cfg.json) {
    json j;
    j["group"] = cfg.group;
    j["products"] = std::move(products);
    if (triples > 0) j["associativity"] = {{"triples", triples}, {"passed", assoc_ok}};
    std::cout << j.dump(2) << "\n";
  } else {
    table.print(std::cout);
  }
  return assoc_ok ? 0 : 1;
}

int cmd_ic_convolve(const RunConfig& cfg, const std::string& mu_text, std::int64_t n, const std::string& lam_text,
                    std::int64_t m) {
  const RootDatum rd = parse_group(cfg.group);
  RepRing R(rd);
  const ICClass a{DominantCocharacter(rd, parse_vec(mu_text)).value(), n};
  const ICClass b{DominantCocharacter(rd, parse_vec(lam_text)).value(), m};
  const K0Element product = convolve_ic(R, a, b);
  const std::int64_t expected = purity_weight(rd, a) + purity_weight(rd, b);
  bool additive = true;
  for (const auto& [z, c] : product) additive = additive && purity_weight(rd, z) == expected;
  if (cfg.json) {
    json j;
    j["group"] = cfg.group;
    j["a"] = {{"mu", vec_to_json(a.mu)}, {"n", a.n}, {"weight", purity_weight(rd, a)}};
    j["b"] = {{"mu", vec_to_json(b.mu)}, {"n", b.n}, {"weight", purity_weight(rd, b)}};
    j["rows"] = k0_to_json(rd, product);
    j["weights_additive"] = additive;
    std::cout << j.dump(2) << "\n";
    return additive ? 0 : 1;
  }
  std::cout << format_ic(a) << " * " << format_ic(b) << " = " << format_k0(product) << "\n";
  Table table({"nu", "N", "twist", "weight"});
  for (const auto& [z, c] : product) {
    table.add({format_vec(z.mu), c.str(), std::to_string(z.n), std::to_string(purity_weight(rd, z))});
  }
  table.print(std::cout);
  std::cout << "weights additive (" << expected << "): " << yes_no(additive) << "\n";
  return additive ? 0 : 1;
}

int cmd_satake_table(const RunConfig& cfg) {
  const RootDatum rd = parse_group(cfg.group);
  SphericalHecke H(rd, engine_options(cfg));
  const auto mus = verify::sweep(rd, cfg.bound);
  bool diagonal_ok = true;
  json rows = json::array();
  Table table({"IC", "d", "f in c-basis", "Satake image", "scalars"});
  for (const auto& mu : mus) {
    const SatakeFunction f = H.ic_function(mu);
    const LaurentPoly lead = f.coeff(mu);
    diagonal_ok = diagonal_ok && (lead == LaurentPoly(1) || lead == LaurentPoly(-1));
    const G1RingElement image = H.satake_transform(f);
    rows.push_back({{"mu", vec_to_json(mu.value())},
                    {"n", 0},
                    {"d", d_pairing(rd, mu)},
                    {"f", H.to_json(f)},
                    {"image", g1_to_json(image)},
                    {"scalar_ring", minimal_scalar_ring(f)}});
    table.add({format_ic({mu.value(), 0}), std::to_string(d_pairing(rd, mu)), H.format(f), format_g1(image),
               minimal_scalar_ring(f)});
  }
  const DominantCocharacter zero = H.dominant(zero_vec(rd.rank()));
  const SatakeFunction twisted = H.ic_function(zero, -1);
  const G1RingElement twisted_image = H.satake_transform(twisted);
  rows.push_back({{"mu", vec_to_json(zero.value())},
                  {"n", -1},
                  {"d", 0},
                  {"f", H.to_json(twisted)},
                  {"image", g1_to_json(twisted_image)},
                  {"scalar_ring", minimal_scalar_ring(twisted)}});
  table.add({format_ic({zero.value(), -1}), "0", H.format(twisted), format_g1(twisted_image),
             minimal_scalar_ring(twisted)});
  const char* sign = cfg.signed_trace ? "signed" : "unsigned";
  if (cfg.json) {
    json j;
    j["group"] = cfg.group;
    j["bound"] = cfg.bound;
    j["sign_convention"] = sign;
    j["rows"] = std::move(rows);
    j["diagonal_units"] = diagonal_ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "group " << cfg.group << ", bound " << cfg.bound << ", " << sign << " trace\n";
    table.print(std::cout);
    std::cout << "diagonal entries are units: " << yes_no(diagonal_ok) << "\n";
  }
  return diagonal_ok ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg, const std::string& fault) {
  verify::Config vc;
  vc.groups = {cfg.group};
  vc.bound = cfg.bound;
  vc.seed = cfg.seed;
  vc.sign = cfg.signed_trace ? SignConvention::Signed : SignConvention::Unsigned;
  if (fault == "q-analog") {
    vc.corrupt_q_analog = true;
  } else if (!fault.empty()) {
    throw std::invalid_argument("unknown fault '" + fault + "'");
  }
  const auto results = verify::run_all(vc);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (cfg.json) {
    json j = verify::to_json(results);
    j["group"] = cfg.group;
    j["bound"] = cfg.bound;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) std::cout << verify::format_line(r) << "\n";
    std::cout << (all ? "all checks passed" : "verification FAILED") << "\n";
  }
  return all ? 0 : 1;
}

int cmd_parity(const RunConfig& cfg, const std::string& mu_text) {
  const RootDatum rd = parse_group(cfg.group);
  SphericalHecke H(rd, engine_options(cfg));
  std::vector<DominantCocharacter> mus;
  if (mu_text.empty()) {
    mus = verify::sweep(rd, cfg.bound);
  } else {
    mus.emplace_back(rd, parse_vec(mu_text));
  }
  std::size_t violations = 0;
  json reports = json::array();
  Table table({"mu", "lambda", "h(q)", "polynomial", "nonnegative"});
  for (const auto& mu : mus) {
    const ParityReport rep = parity_report(H, mu);
    violations += rep.violations;
    json rows = json::array();
    for (const auto& row : rep.rows) {
      rows.push_back({{"lam", vec_to_json(row.lam)},
                      {"h", row.h.to_json()},
                      {"polynomial", row.polynomial},
                      {"nonnegative", row.nonnegative}});
      table.add({format_vec(mu.value()), format_vec(row.lam), row.h.str(), yes_no(row.polynomial),
                 yes_no(row.nonnegative)});
    }
    reports.push_back({{"mu", vec_to_json(mu.value())}, {"d", rep.d}, {"rows", std::move(rows)},
                       {"violations", rep.violations}});
  }
  if (cfg.json) {
    json j;
    j["group"] = cfg.group;
    j["reports"] = std::move(reports);
    j["violations"] = violations;
    std::cout << j.dump(2) << "\n";
  } else {
    table.print(std::cout);
    std::cout << "violations: " << violations << "\n";
  }
  return violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spherical Hecke algebras, IC trace functions and the Satake transform"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--group", cfg.group, "catalog group, e.g. GL(2), SL(3), PGL(2), Sp(4), torus(1), GL(2)xSL(2)")
      ->envname("SATAKE_GROUP")
      ->capture_default_str();
  app.add_option("--bound", cfg.bound, "largest <2rho,mu> swept")
      ->envname("SATAKE_BOUND")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_flag("--signed-trace", cfg.signed_trace, "use the sign (-1)^<2rho,mu> in IC trace functions")
      ->envname("SATAKE_SIGNED_TRACE");
  app.add_flag("--json", cfg.json, "emit JSON")->envname("SATAKE_JSON");
  app.add_option("--seed", cfg.seed, "seed for randomized checks")->envname("SATAKE_SEED")->capture_default_str();

  auto* describe = app.add_subcommand("describe", "root datum, dual datum, pi1 and the modified dual group");
  describe->fallthrough();

  std::vector<std::string> exprs;
  std::size_t triples = 0;
  auto* hecke = app.add_subcommand("hecke-mul", "products of T-basis elements, e.g. 's1*s1' or 't[1]*s0'");
  hecke->fallthrough();
  hecke->add_option("products", exprs, "products of factors joined by '*'");
  hecke->add_option("--assoc", triples, "also check associativity on this many random triples");

  std::string mu_text = "0", lam_text = "0";
  std::int64_t n = 0, m = 0;
  auto* conv = app.add_subcommand("ic-convolve", "decompose IC_mu(n) * IC_lam(m)");
  conv->fallthrough();
  conv->add_option("--mu", mu_text, "dominant cocharacter, e.g. 1,0")->required();
  conv->add_option("--n", n, "Tate twist of the first factor");
  conv->add_option("--lam", lam_text, "dominant cocharacter")->required();
  conv->add_option("--m", m, "Tate twist of the second factor");

  auto* table = app.add_subcommand("satake-table", "IC trace functions in the c-basis and their Satake images");
  table->fallthrough();

  std::string fault;
  auto* verify_cmd = app.add_subcommand("verify", "run every acceptance check for --group up to --bound");
  verify_cmd->fallthrough();
  verify_cmd->add_option("--inject-fault", fault, "negative control: q-analog");

  std::string parity_mu;
  auto* parity_cmd = app.add_subcommand("parity", "stalk polynomial table and parity/positivity check");
  parity_cmd->fallthrough();
  parity_cmd->add_option("--mu", parity_mu, "single dominant cocharacter (default: all up to --bound)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*describe) return cmd_describe(cfg);
    if (*hecke) return cmd_hecke_mul(cfg, exprs, triples);
    if (*conv) return cmd_ic_convolve(cfg, mu_text, n, lam_text, m);
    if (*table) return cmd_satake_table(cfg);
    if (*verify_cmd) return cmd_verify(cfg, fault);
    if (*parity_cmd) return cmd_parity(cfg, parity_mu);
  } catch (const InternalError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
