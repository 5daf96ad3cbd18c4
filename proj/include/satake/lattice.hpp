#pragma once

#include <algorithm>
#include <boost/container/small_vector.hpp>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace satake {

/// Element of a rank-r lattice in a fixed basis.
using LatticeVec = boost::container::small_vector<std::int64_t, 4>;

LatticeVec zero_vec(std::size_t rank);
LatticeVec operator+(const LatticeVec& a, const LatticeVec& b);
LatticeVec operator-(const LatticeVec& a, const LatticeVec& b);
LatticeVec operator-(const LatticeVec& a);
LatticeVec scaled(const LatticeVec& a, std::int64_t s);
std::int64_t dot(const LatticeVec& a, const LatticeVec& b);
bool is_zero(const LatticeVec& a);
inline std::strong_ordering compare_vec(const LatticeVec& a, const LatticeVec& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

/// `(1,-1,0)`
std::string format_vec(const LatticeVec& v);
/// Parses `1,-1,0` or `(1,-1,0)` or `[1,-1,0]`.
LatticeVec parse_vec(const std::string& text);
nlohmann::ordered_json vec_to_json(const LatticeVec& v);

struct LatticeVecHash {
  std::size_t operator()(const LatticeVec& v) const noexcept;
};

/// Small dense integer matrix, row major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static IntMatrix from_columns(std::size_t rows, const std::vector<LatticeVec>& columns);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  LatticeVec apply(const LatticeVec& v) const;
  LatticeVec column(std::size_t c) const;
  LatticeVec row(std::size_t r) const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
  friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) = default;

  nlohmann::ordered_json to_json() const;
  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Rank of an integer matrix (exact, over the rationals).
std::size_t rank_of(const IntMatrix& m);

/// Left inverse of an injective integer matrix A (rows >= cols, full column
/// rank), stored as an integer matrix L and a common denominator D with
/// L*A = D*I. Used to read off coordinates in a sublattice basis.
struct ScaledLeftInverse {
  IntMatrix numerator;
  std::int64_t denominator = 1;
};
ScaledLeftInverse left_inverse(const IntMatrix& a);

/// Integer solution c of A c = v for A injective, when one exists.
std::optional<LatticeVec> solve_integral(const IntMatrix& a, const ScaledLeftInverse& inv, const LatticeVec& v);

/// Smith normal form data: U*A*V = diag(d_1, ..., d_k, 0, ...) with U
/// unimodular. Only U and the invariant factors are kept.
struct SmithForm {
  IntMatrix left;                      // U, rows x rows
  std::vector<std::int64_t> invariants;  // d_1 | d_2 | ... (nonzero ones)
};
SmithForm smith_form(const IntMatrix& a);

/// Primitive integer basis of the rational null space of `m` (vectors x with m x = 0).
std::vector<LatticeVec> integer_kernel(const IntMatrix& m);

}  // namespace satake
