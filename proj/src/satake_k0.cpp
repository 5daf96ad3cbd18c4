#include "satake/satake_k0.hpp"

#include "satake/errors.hpp"
#include "satake/hecke.hpp"

namespace satake {

std::int64_t purity_weight(const RootDatum& rd, const ICClass& a) { return d_pairing(rd, a.mu) - 2 * a.n; }

int parity(const RootDatum& rd, const ICClass& a) { return parity(rd, a.mu); }

K0Element convolve_ic(const RepRing& rep, const ICClass& a, const ICClass& b) {
  const RootDatum& rd = rep.datum();
  const std::int64_t da = d_pairing(rd, a.mu);
  const std::int64_t db = d_pairing(rd, b.mu);
  K0Element out;
  for (const auto& [nu, n] : rep.tensor_decompose(DominantCocharacter(rd, a.mu), DominantCocharacter(rd, b.mu))) {
    const std::int64_t offset = d_pairing(rd, nu) - da - db;
    if (offset % 2 != 0) {
      throw InternalError("non-integral twist for " + format_vec(nu) + " in " + format_ic(a) + " * " + format_ic(b));
    }
    out.add_term({nu, a.n + b.n + offset / 2}, BigInt(n));
  }
  return out;
}

K0Element convolve(const RepRing& rep, const K0Element& a, const K0Element& b) {
  return bilinear_extend(a, b, [&](const ICClass& x, const ICClass& y) { return convolve_ic(rep, x, y); });
}

std::string format_ic(const ICClass& a) { return "IC[" + format_vec(a.mu) + "](" + std::to_string(a.n) + ")"; }

std::string format_k0(const K0Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [key, c] : x) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    out += format_ic(key);
    if (mag != 1) out += "^" + mag.str();
  }
  return out;
}

nlohmann::ordered_json k0_to_json(const RootDatum& rd, const K0Element& x) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& [key, c] : x) {
    nlohmann::ordered_json row;
    row["nu"] = vec_to_json(key.mu);
    row["multiplicity"] = LaurentPoly(c).to_json()["0"];
    row["twist"] = key.n;
    row["weight"] = purity_weight(rd, key);
    rows.push_back(std::move(row));
  }
  return rows;
}

SatakeFunction trace_to_hecke(const SphericalHecke& engine, const K0Element& x) {
  SatakeFunction out;
  for (const auto& [key, c] : x) {
    out += engine.ic_function(DominantCocharacter(engine.datum(), key.mu), key.n).scaled(LaurentPoly(c));
  }
  return out;
}

ParityReport parity_report(const SphericalHecke& engine, const DominantCocharacter& mu) {
  ParityReport report{mu.value(), d_pairing(engine.datum(), mu), {}, 0};
  for (const auto& lam : engine.rep().dominant_weights(mu)) {
    ParityRow row{lam, engine.raw_stalk_polynomial(mu, DominantCocharacter(engine.datum(), lam)), true, true};
    row.polynomial = row.h.is_polynomial();
    row.nonnegative = row.h.has_nonnegative_coefficients();
    if (!row.polynomial || !row.nonnegative) ++report.violations;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace satake
