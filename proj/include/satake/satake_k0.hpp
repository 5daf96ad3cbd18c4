#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "json.hpp"
#include "satake/based_module.hpp"
#include "satake/rep_ring.hpp"
#include "satake/root_datum.hpp"

namespace satake {

/// Class of IC_mu(n) in K0 of the Satake category.
struct ICClass {
  LatticeVec mu;
  std::int64_t n = 0;

  friend bool operator==(const ICClass&, const ICClass&) = default;
  friend std::strong_ordering operator<=>(const ICClass& a, const ICClass& b) {
    if (auto c = compare_vec(a.mu, b.mu); c != 0) return c;
    return a.n <=> b.n;
  }
};

using K0Element = BasedModule<ICClass, BigInt>;

/// <2 rho, mu> - 2n
std::int64_t purity_weight(const RootDatum& rd, const ICClass& a);
int parity(const RootDatum& rd, const ICClass& a);

/// IC_mu(n) * IC_lam(m) = sum_nu N^nu IC_nu(n + m + (d_nu - d_mu - d_lam)/2).
/// Throws InternalError if a twist is not an integer.
K0Element convolve_ic(const RepRing& rep, const ICClass& a, const ICClass& b);
/// Bilinear extension of convolve_ic.
K0Element convolve(const RepRing& rep, const K0Element& a, const K0Element& b);

/// `IC[(1,0)](-1)`, with `^N` for multiplicities N > 1.
std::string format_ic(const ICClass& a);
std::string format_k0(const K0Element& x);
/// Rows {nu, multiplicity, twist, weight}.
nlohmann::ordered_json k0_to_json(const RootDatum& rd, const K0Element& x);

}  // namespace satake
