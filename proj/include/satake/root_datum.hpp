#pragma once

#include <compare>
#include <optional>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "satake/lattice.hpp"

namespace satake {

/// A based root datum (X*, X_*, roots, coroots, pairing) of a split reductive
/// group. Characters and cocharacters are integer tuples in fixed bases of
/// rank `rank()`; the pairing is <chi, x> = chi^T P x for the pairing matrix P.
///
/// Immutable after construction. The constructor validates Cartan
/// integrality and generates the positive (co)roots by saturating the simple
/// reflections.
class RootDatum {
 public:
  RootDatum(std::string name, IntMatrix pairing, std::vector<LatticeVec> simple_roots,
            std::vector<LatticeVec> simple_coroots);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return rank_; }
  std::size_t semisimple_rank() const { return simple_roots_.size(); }
  const IntMatrix& pairing_matrix() const { return pairing_; }

  /// <chi, x> for a character chi and a cocharacter x.
  std::int64_t pair(const LatticeVec& chi, const LatticeVec& x) const;

  const std::vector<LatticeVec>& simple_roots() const { return simple_roots_; }
  const std::vector<LatticeVec>& simple_coroots() const { return simple_coroots_; }
  /// positive_roots()[j] and positive_coroots()[j] are a root/coroot pair.
  const std::vector<LatticeVec>& positive_roots() const { return positive_roots_; }
  const std::vector<LatticeVec>& positive_coroots() const { return positive_coroots_; }
  /// Coordinates of positive_roots()[j] in the simple root basis (the same
  /// coordinates do NOT describe the coroot in the simple coroot basis for
  /// non-simply-laced types; see positive_coroot_coords()).
  const std::vector<LatticeVec>& positive_root_coords() const { return positive_root_coords_; }
  const std::vector<LatticeVec>& positive_coroot_coords() const { return positive_coroot_coords_; }

  /// a_ij = <alpha_i, alpha_j^vee>
  IntMatrix cartan_matrix() const;
  /// Sum of positive roots, a character.
  const LatticeVec& two_rho() const { return two_rho_; }
  /// Sum of positive coroots, a cocharacter.
  const LatticeVec& two_rho_check() const { return two_rho_check_; }
  /// Pairing row of positive root j: <alpha_j, x> = dot(root_pairing_row(j), x).
  const LatticeVec& root_pairing_row(std::size_t j) const { return root_rows_[j]; }

  /// Irreducible components as lists of simple indices, ordered by first index.
  const std::vector<std::vector<std::size_t>>& components() const { return components_; }
  /// Index (into positive_roots()) of the highest root of each component.
  const std::vector<std::size_t>& highest_roots() const { return highest_roots_; }

  /// Integral coordinates of a cocharacter in the simple coroot basis, if it
  /// lies in the coroot lattice.
  std::optional<LatticeVec> coroot_coordinates(const LatticeVec& x) const;
  /// Label of x in X_* / (coroot lattice); equal labels iff same class.
  LatticeVec pi1_label(const LatticeVec& x) const;
  /// Invariant factors of pi_1 (torsion part) and its free rank.
  const std::vector<std::int64_t>& pi1_torsion() const { return pi1_torsion_; }
  std::size_t pi1_free_rank() const { return pi1_free_rank_; }
  /// |pi_1|, or 0 if infinite.
  std::uint64_t pi1_order() const;
  /// Characters orthogonal to every coroot, primitive, over Q a basis.
  const std::vector<LatticeVec>& central_characters() const { return central_characters_; }

  bool is_dominant(const LatticeVec& x) const;
  bool in_lattice(const LatticeVec& x) const { return x.size() == rank_; }

  /// Content hash, used to detect keys built for different data.
  std::uint64_t fingerprint() const { return fingerprint_; }

  friend bool operator==(const RootDatum& a, const RootDatum& b);

 private:
  std::string name_;
  std::size_t rank_;
  IntMatrix pairing_;
  std::vector<LatticeVec> simple_roots_;
  std::vector<LatticeVec> simple_coroots_;
  std::vector<LatticeVec> positive_roots_;
  std::vector<LatticeVec> positive_coroots_;
  std::vector<LatticeVec> positive_root_coords_;
  std::vector<LatticeVec> positive_coroot_coords_;
  std::vector<LatticeVec> root_rows_;
  std::vector<LatticeVec> simple_root_rows_;
  LatticeVec two_rho_;
  LatticeVec two_rho_check_;
  std::vector<std::vector<std::size_t>> components_;
  std::vector<std::size_t> highest_roots_;
  IntMatrix coroot_matrix_;
  ScaledLeftInverse coroot_inverse_;
  SmithForm pi1_smith_;
  std::vector<std::int64_t> pi1_torsion_;
  std::size_t pi1_free_rank_ = 0;
  std::vector<LatticeVec> central_characters_;
  std::uint64_t fingerprint_ = 0;
};

/// Catalog of split groups: "GL", "SL", "PGL" (params {n}), "Sp" (params {4}),
/// "torus" (params {n}).
RootDatum catalog(std::string_view name, std::span<const int> params);
/// Parses `GL(2)`, `SL(3)`, `PGL(2)`, `Sp(4)`, `torus(1)` and products `GL(2)xSL(2)`.
RootDatum parse_group(std::string_view text);
/// Direct product of two root data.
RootDatum product(const RootDatum& a, const RootDatum& b);
/// Langlands dual: swaps lattices and roots/coroots, transposes the pairing.
RootDatum dual(const RootDatum& rd);
/// Isomorphism test up to relabeling of bases: rank, Cartan matrix, and the
/// Smith invariants of the coroot and root lattices inside X_* and X^*.
bool equivalent(const RootDatum& a, const RootDatum& b);

/// Validated dominant cocharacter of a specific root datum.
class DominantCocharacter {
 public:
  /// Throws std::invalid_argument when x is not dominant for rd.
  DominantCocharacter(const RootDatum& rd, LatticeVec x);

  const LatticeVec& value() const { return value_; }
  std::uint64_t datum() const { return datum_; }

  friend bool operator==(const DominantCocharacter& a, const DominantCocharacter& b) {
    return a.value_ == b.value_;
  }
  friend auto operator<=>(const DominantCocharacter& a, const DominantCocharacter& b) {
    return compare_vec(a.value_, b.value_);
  }

 private:
  LatticeVec value_;
  std::uint64_t datum_;
};

/// Class of a cocharacter in pi_1(G) = X_* / coroot lattice.
struct Pi1Class {
  LatticeVec label;
  friend bool operator==(const Pi1Class&, const Pi1Class&) = default;
};
Pi1Class pi1_class(const RootDatum& rd, const LatticeVec& x);

/// lam <= mu iff mu - lam is a nonnegative integral combination of simple
/// coroots. Throws std::invalid_argument for keys of another datum.
bool dominance_leq(const RootDatum& rd, const DominantCocharacter& lam, const DominantCocharacter& mu);
/// <2 rho, mu>, the dimension of the Schubert cell.
std::int64_t d_pairing(const RootDatum& rd, const LatticeVec& mu);
inline std::int64_t d_pairing(const RootDatum& rd, const DominantCocharacter& mu) {
  return d_pairing(rd, mu.value());
}
/// <2 rho, mu> mod 2, in {0, 1}.
int parity(const RootDatum& rd, const LatticeVec& mu);
inline int parity(const RootDatum& rd, const DominantCocharacter& mu) { return parity(rd, mu.value()); }

/// The element eps = (2 rho)(-1) of the dual torus, as the character
/// evaluation chi -> (-1)^{<2 rho, chi>} on X*(T^) = X_*(T).
class EpsilonCharacter {
 public:
  explicit EpsilonCharacter(LatticeVec two_rho) : two_rho_(std::move(two_rho)) {}
  int operator()(const LatticeVec& chi) const;
  /// eps == 1 on the whole lattice (checked on a basis).
  bool is_trivial() const;

 private:
  LatticeVec two_rho_;
};

/// Data of Deligne's modified dual group G^_1 = (G^ x G_m) / mu_2.
struct G1Data {
  RootDatum dual_datum;
  EpsilonCharacter epsilon;
  bool epsilon_trivial;
  bool direct_product;
  /// Human readable structure line, e.g. "G^_1 = GL_2".
  std::string structure;
};
G1Data g1_data(const RootDatum& rd);

/// Dominant cocharacters mu with <2 rho, mu> <= max_d. For groups with a
/// central torus the set is infinite; it is cut down to |<z, mu>| <=
/// central_radius for every central character z.
std::vector<DominantCocharacter> dominant_cocharacters(const RootDatum& rd, std::int64_t max_d,
                                                       std::int64_t central_radius = 1);

/// {name, rank, pairing_matrix, simple_roots, simple_coroots}
nlohmann::ordered_json to_json(const RootDatum& rd);

}  // namespace satake
