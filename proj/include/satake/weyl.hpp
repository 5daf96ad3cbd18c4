#pragma once

#include <compare>
#include <map>
#include <optional>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "satake/lattice.hpp"
#include "satake/root_datum.hpp"

namespace satake {

/// Element of the finite Weyl group W0, acting on the cocharacter lattice.
struct FiniteWeylElement {
  IntMatrix action;
  std::vector<std::size_t> word;  // reduced, smallest-index left descents first
  std::size_t length = 0;
};

/// The finite Weyl group W0 of a root datum, enumerated once and then
/// read-only. Elements are addressed by index; index 0 is the identity and
/// index i+1 is the simple reflection s_i.
class FiniteWeylGroup {
 public:
  static constexpr std::size_t kDefaultBound = 3628800;  // 10!

  explicit FiniteWeylGroup(const RootDatum& rd, std::size_t bound = kDefaultBound);

  const RootDatum& datum() const { return rd_; }
  std::size_t size() const { return elements_.size(); }
  const FiniteWeylElement& element(std::size_t w) const { return elements_[w]; }
  const std::vector<FiniteWeylElement>& elements() const { return elements_; }

  std::size_t identity() const { return 0; }
  std::size_t simple(std::size_t i) const { return i + 1; }
  std::size_t longest() const { return longest_; }
  std::size_t length(std::size_t w) const { return elements_[w].length; }
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t w) const { return inverse_[w]; }
  /// Index of the element acting by `m`, if any.
  std::optional<std::size_t> find(const IntMatrix& m) const;
  /// Index of the reflection in the positive coroot j.
  std::size_t reflection(std::size_t j) const { return reflections_[j]; }

  LatticeVec apply(std::size_t w, const LatticeVec& x) const { return elements_[w].action.apply(x); }
  /// Whether w^{-1} maps positive root j to a positive root.
  bool inverse_keeps_positive(std::size_t w, std::size_t j) const {
    return inv_keeps_positive_[w * rd_.positive_roots().size() + j];
  }

  /// Sorted W0-orbit of a cocharacter.
  std::vector<LatticeVec> orbit(const LatticeVec& x) const;
  /// Dominant W0-conjugate of x.
  LatticeVec dominant_conjugate(const LatticeVec& x) const;

  /// Reduced word as `s1s2`, identity as `e`.
  std::string word_string(std::size_t w) const;

 private:
  RootDatum rd_;
  std::vector<FiniteWeylElement> elements_;
  std::map<IntMatrix, std::size_t> index_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> table_;  // |W0|^2 multiplication table when small
  std::vector<std::size_t> reflections_;
  std::vector<bool> inv_keeps_positive_;
  std::size_t longest_ = 0;
};

/// All of W0, duplicate free and closed under multiplication.
std::vector<FiniteWeylElement> finite_weyl(const RootDatum& rd, std::size_t bound = FiniteWeylGroup::kDefaultBound);

/// Element t_lambda * w of the extended affine Weyl group X_* x| W0, acting on
/// X_* (x) R by x -> lambda + w x. `finite` indexes the owning group's W0.
struct AffineWeylElement {
  LatticeVec translation;
  std::uint32_t finite = 0;

  friend bool operator==(const AffineWeylElement&, const AffineWeylElement&) = default;
  friend auto operator<=>(const AffineWeylElement& a, const AffineWeylElement& b) {
    if (auto c = compare_vec(a.translation, b.translation); c != 0) return c;
    return a.finite <=> b.finite;
  }
};

struct AffineWeylElementHash {
  std::size_t operator()(const AffineWeylElement& x) const noexcept {
    return LatticeVecHash{}(x.translation) * 31 + x.finite;
  }
};

/// x = s_{word[0]} ... s_{word[k-1]} * omega with l(x) = k and l(omega) = 0.
struct ReducedDecomposition {
  std::vector<std::size_t> word;
  AffineWeylElement omega;
};

enum class DescentTieBreak { Smallest, Largest };

/// Result of spherical_double_coset.
struct DoubleCoset {
  std::vector<AffineWeylElement> elements;  // sorted
  AffineWeylElement minimal;
  AffineWeylElement maximal;
};

/// Extended affine Weyl group W = X_* x| W0 with its affine simple system:
/// the finite simple reflections s_1..s_r (indices 0..r-1) followed by one
/// affine reflection s_0 = t_{theta^vee} s_theta per irreducible component
/// (indices r, r+1, ...). Lengths follow the Iwahori-Matsumoto formula for
/// the base alcove cut out by the simple roots and the highest roots.
class AffineWeylGroup {
 public:
  struct Options {
    std::size_t finite_bound = FiniteWeylGroup::kDefaultBound;
    std::size_t bruhat_bound = 12;
  };

  explicit AffineWeylGroup(const RootDatum& rd) : AffineWeylGroup(rd, Options{}) {}
  AffineWeylGroup(const RootDatum& rd, Options options);

  const RootDatum& datum() const { return finite_.datum(); }
  const FiniteWeylGroup& finite() const { return finite_; }
  std::size_t num_simple() const { return simple_.size(); }
  bool is_affine_simple(std::size_t i) const { return i >= datum().semisimple_rank(); }
  const AffineWeylElement& simple_reflection(std::size_t i) const { return simple_[i]; }

  AffineWeylElement identity() const;
  AffineWeylElement translation(const LatticeVec& lambda) const;
  AffineWeylElement from_finite(std::size_t w) const;
  AffineWeylElement multiply(const AffineWeylElement& x, const AffineWeylElement& y) const;
  AffineWeylElement inverse(const AffineWeylElement& x) const;
  /// x * s_i, specialised.
  AffineWeylElement right_simple(const AffineWeylElement& x, std::size_t i) const;
  /// s_i * x
  AffineWeylElement left_simple(const AffineWeylElement& x, std::size_t i) const;

  /// Iwahori-Matsumoto length.
  std::size_t length(const AffineWeylElement& x) const;

  /// Greedy left-descent decomposition; throws InternalError if a
  /// positive-length element has no descent.
  ReducedDecomposition reduced_word(const AffineWeylElement& x,
                                    DescentTieBreak tie = DescentTieBreak::Smallest) const;
  /// Product s_{word[0]} ... s_{word[k-1]}.
  AffineWeylElement evaluate(const std::vector<std::size_t>& word) const;

  /// Same component of W = W_aff x| Omega, i.e. translations in the same pi_1 class.
  bool same_omega_component(const AffineWeylElement& x, const AffineWeylElement& y) const;
  /// Bruhat order by the subword property on the reduced word of w chosen by
  /// `tie`. Throws std::length_error when l(w) exceeds the configured bound.
  bool bruhat_leq(const AffineWeylElement& v, const AffineWeylElement& w,
                  DescentTieBreak tie = DescentTieBreak::Smallest) const;

  /// W0 t_mu W0, with its unique minimal and maximal length elements.
  DoubleCoset spherical_double_coset(const DominantCocharacter& mu) const;

  /// Length-zero elements whose translation lies in the box |lambda_i| <= bound.
  std::vector<AffineWeylElement> omega_elements(std::int64_t translation_bound) const;
  /// Permutation of the affine simple indices induced by conjugation with a
  /// length-zero element: omega s_i omega^{-1} = s_{perm[i]}.
  std::vector<std::size_t> omega_action(const AffineWeylElement& omega) const;

  /// (r+1)x(r+1) integer matrix of the affine action on X_* (homogeneous coordinates).
  IntMatrix affine_matrix(const AffineWeylElement& x) const;

  /// `t[lambda]·w`, e.g. `t[1,0]·s1`; identity finite part prints as `e`.
  std::string format(const AffineWeylElement& x) const;
  /// Affine word as `s1s0`, `s0.2` for the second affine generator; `e` if empty.
  std::string affine_word_string(const std::vector<std::size_t>& word) const;
  /// {translation, word, omega}
  nlohmann::ordered_json to_json(const AffineWeylElement& x) const;

  std::size_t bruhat_bound() const { return options_.bruhat_bound; }

 private:
  FiniteWeylGroup finite_;
  Options options_;
  std::vector<AffineWeylElement> simple_;
};

}  // namespace satake
