#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "satake/lattice.hpp"
#include "satake/rep_ring.hpp"
#include "satake/root_datum.hpp"

// Independent recomputations used to cross-check the main library. None of
// these share code paths with the Kostant machinery in rep_ring.

namespace satake::oracle {

/// Sum of positive roots, obtained by evaluating every positive root row.
LatticeVec two_rho_by_summation(const RootDatum& rd);
/// <2 rho, x> as sum_{alpha > 0} <alpha, x>.
std::int64_t d_by_summation(const RootDatum& rd, const LatticeVec& x);

/// Dominant conjugate by repeated simple reflections (no group table).
LatticeVec dominant_conjugate(const RootDatum& rd, const LatticeVec& x);

/// Dominant weights of V_mu by box enumeration between w0 mu and mu.
std::vector<LatticeVec> dominant_weights(const RootDatum& rd, const LatticeVec& mu);

/// Weight multiplicities of V_mu at its dominant weights by Freudenthal's
/// recursion, with the W-invariant form (x, y) = sum_{alpha > 0} <alpha,x><alpha,y>.
std::map<LatticeVec, std::int64_t, LatticeVecLess> freudenthal(const RootDatum& rd, const LatticeVec& mu);

/// Weyl's product formula prod_{alpha > 0} <alpha, mu + rho^> / <alpha, rho^>.
std::int64_t weyl_dimension(const RootDatum& rd, const LatticeVec& mu);

/// Brauer-Klimyk tensor decomposition from the Freudenthal character of lam.
TensorDecomposition racah_speiser(const RootDatum& rd, const LatticeVec& mu, const LatticeVec& lam);

}  // namespace satake::oracle
