#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "json.hpp"
#include "satake/based_module.hpp"
#include "satake/laurent.hpp"
#include "satake/lattice.hpp"
#include "satake/root_datum.hpp"
#include "satake/weyl.hpp"

namespace satake {

struct LatticeVecLess {
  bool operator()(const LatticeVec& a, const LatticeVec& b) const { return compare_vec(a, b) < 0; }
};

/// Weight multiset of a representation of the dual group: weight -> multiplicity.
using Character = std::map<LatticeVec, std::int64_t, LatticeVecLess>;

/// nu -> N^nu_{mu lambda}
using TensorDecomposition = std::map<LatticeVec, std::int64_t, LatticeVecLess>;

/// Basis element (mu, k) of R(G^_1); k is the weight of the central G_m and
/// satisfies k = <2 rho, mu> mod 2. V_mu(n) has k = 2n - <2 rho, mu>.
struct G1RepClass {
  LatticeVec mu;
  std::int64_t k = 0;

  friend bool operator==(const G1RepClass&, const G1RepClass&) = default;
  friend std::strong_ordering operator<=>(const G1RepClass& a, const G1RepClass& b) {
    if (auto c = compare_vec(a.mu, b.mu); c != 0) return c;
    return a.k <=> b.k;
  }
};

using G1RingElement = BasedModule<G1RepClass, LaurentPoly>;

/// Representation theory of the dual group G^ of a root datum: weights of G^
/// are cocharacters of G and roots of G^ are coroots of G. Holds the Weyl
/// group and a memo table for the q-Kostant partition function; the memo is
/// guarded, so one instance may be shared between threads.
class RepRing {
 public:
  struct Options {
    /// Negative control: perturbs every off-diagonal q-analog by (q - 1).
    bool corrupt_q_analog = false;
  };

  explicit RepRing(const RootDatum& rd) : RepRing(rd, Options{}) {}
  RepRing(const RootDatum& rd, Options options);

  const RootDatum& datum() const { return weyl_.datum(); }
  const FiniteWeylGroup& weyl() const { return weyl_; }

  /// Sum over multisets of positive coroots adding up to v of q^{size};
  /// at q = 1 when `q_graded` is false.
  LaurentPoly kostant_partition(const LatticeVec& v, bool q_graded = true) const;

  /// Kostant multiplicity of the weight lam in V_mu.
  std::int64_t weight_multiplicity(const DominantCocharacter& mu, const LatticeVec& lam) const;
  /// Dominant lam <= mu, sorted by descending <2 rho, lam> and then by value.
  std::vector<LatticeVec> dominant_weights(const DominantCocharacter& mu) const;
  Character character(const DominantCocharacter& mu) const;
  std::int64_t weyl_dim(const DominantCocharacter& mu) const;
  TensorDecomposition tensor_decompose(const DominantCocharacter& mu, const DominantCocharacter& lam) const;

  /// m_mu^lam(q) = sum_w (-1)^{l(w)} P_q(w(mu + rho^) - (lam + rho^)).
  LaurentPoly lusztig_q_analog(const DominantCocharacter& mu, const LatticeVec& lam) const;

  /// Validated basis element; throws std::invalid_argument on a parity mismatch.
  G1RepClass g1_class(const LatticeVec& mu, std::int64_t k) const;
  /// Class of V_mu(n).
  G1RepClass key_of(const DominantCocharacter& mu, std::int64_t n) const;
  G1RingElement g1_mul(const G1RingElement& a, const G1RingElement& b) const;

 private:
  LaurentPoly partition_coords(const LatticeVec& coords, std::size_t upto) const;

  FiniteWeylGroup weyl_;
  Options options_;
  LatticeVec two_rho_hat_;  // sum of positive coroots = 2 rho^
  struct MemoKey {
    LatticeVec coords;
    std::size_t upto;
    friend bool operator<(const MemoKey& a, const MemoKey& b) {
      if (a.upto != b.upto) return a.upto < b.upto;
      return compare_vec(a.coords, b.coords) < 0;
    }
  };
  mutable std::mutex memo_mutex_;
  mutable std::map<MemoKey, LaurentPoly> memo_;
};

/// (mu, k) -> q^{-(k - r)/2} (mu, r) with r = k mod 2 in {0, 1}: the relation
/// [d^{-1}] = q of R(G^_1)/([d^{-1}] - q).
G1RingElement quotient_normal_form(const G1RingElement& x);

/// `V[mu](k)`
std::string format_g1(const G1RepClass& key);
std::string format_g1(const G1RingElement& x);
nlohmann::ordered_json g1_to_json(const G1RingElement& x);
nlohmann::ordered_json character_to_json(const Character& chi);

}  // namespace satake
