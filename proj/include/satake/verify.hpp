#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "satake/hecke.hpp"

namespace satake::verify {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct Config {
  std::vector<std::string> groups{"PGL(2)"};
  /// Largest <2 rho, mu> swept (sum <2 rho, mu + lam> for products).
  std::int64_t bound = 8;
  std::uint64_t seed = 1;
  SignConvention sign = SignConvention::Unsigned;
  bool corrupt_q_analog = false;
  std::size_t random_triples = 200;
  std::size_t max_triple_length = 6;
};

/// Groups used for sweeps "over the catalog".
const std::vector<std::string>& catalog_sample();

/// Dominant cocharacters with <2 rho, mu> <= bound, cut to |<z, mu>| <= 1 for
/// central characters z.
std::vector<DominantCocharacter> sweep(const RootDatum& rd, std::int64_t bound);

CheckResult quadratic_relation(const Config& config);
CheckResult hecke_associativity(const Config& config);
/// Also fills `weight` with the weight-additivity check over the same sweep.
CheckResult cross_path(const Config& config, CheckResult* weight = nullptr);
CheckResult satake_table(const Config& config);
CheckResult kernel_relation(const Config& config);
CheckResult trace_identity(const Config& config);
CheckResult q_specialization(const Config& config);
CheckResult parity_positivity(const Config& config);
CheckResult dual_table(const Config& config);
CheckResult length_law(const Config& config);

/// Every check above, in order 1..11.
std::vector<CheckResult> run_all(const Config& config);

std::string format_line(const CheckResult& r);
nlohmann::ordered_json to_json(const std::vector<CheckResult>& results);

}  // namespace satake::verify
