// One line per acceptance criterion. Every comparison is exact; the only
// tolerances are the wall-clock budgets below.
#include <cstdio>
#include <string>
#include <vector>

#include "satake/verify.hpp"

using namespace satake::verify;

namespace {

constexpr double kBudgetQuadratic = 1.0;
constexpr double kBudgetAssociativityPerGroup = 30.0;
constexpr double kBudgetCrossPath = 300.0;
constexpr double kBudgetSatakeTable = 10.0;
constexpr double kBudgetSpecialization = 60.0;
constexpr double kUnbounded = 1e9;

Config config(std::vector<std::string> groups, std::int64_t bound) {
  Config c;
  c.groups = std::move(groups);
  c.bound = bound;
  c.seed = 20240601;
  return c;
}

int failures = 0;

void report(CheckResult r, double budget) {
  const bool in_time = r.seconds <= budget;
  const bool ok = r.passed && in_time;
  if (!ok) ++failures;
  std::printf("%s criterion %2d  %-28s %8.3fs  %s%s\n", ok ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
              r.detail.c_str(), in_time ? "" : " (over time budget)");
}

}  // namespace

int main() {
  const std::vector<std::string> small{"PGL(2)", "SL(2)", "SL(3)"};
  const std::vector<std::string> sweep_groups{"GL(2)", "PGL(2)", "SL(2)", "SL(3)"};

  report(quadratic_relation(config(small, 0)), kBudgetQuadratic);

  Config assoc = config(small, 0);
  assoc.random_triples = 200;
  assoc.max_triple_length = 6;
  report(hecke_associativity(assoc), kBudgetAssociativityPerGroup * static_cast<double>(small.size()));

  CheckResult weight;
  report(cross_path(config(sweep_groups, 8), &weight), kBudgetCrossPath);
  report(satake_table(config({"PGL(2)"}, 6)), kBudgetSatakeTable);
  report(kernel_relation(config(catalog_sample(), 0)), kUnbounded);
  report(trace_identity(config({"GL(2)"}, 4)), kUnbounded);
  report(q_specialization(config({"SL(3)", "PGL(2)"}, 8)), kBudgetSpecialization);
  report(parity_positivity(config(catalog_sample(), 10)), kUnbounded);
  report(dual_table(config({}, 0)), kUnbounded);
  report(length_law(config(catalog_sample(), 10)), kUnbounded);
  report(weight, kUnbounded);

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
