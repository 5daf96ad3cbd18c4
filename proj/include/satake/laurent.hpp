#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace satake {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse Laurent polynomial in q with arbitrary-precision integer coefficients.
///
/// Terms are kept sorted by increasing exponent and never store a zero
/// coefficient, so structural equality is polynomial equality.
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using Term = std::pair<Exponent, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const BigInt& constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const BigInt& coeff, Exponent exponent);
  /// q^k
  static LaurentPoly q_power(Exponent k) { return monomial(1, k); }
  static LaurentPoly q() { return q_power(1); }
  /// Builds from (exponent, coefficient) pairs in any order; merges repeats.
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  BigInt coeff(Exponent e) const;
  std::optional<Exponent> min_exponent() const;
  std::optional<Exponent> max_exponent() const;

  BigInt eval_at_one() const;
  /// q -> q^-1
  LaurentPoly invert_q() const;
  /// Multiplication by q^k.
  LaurentPoly shift(Exponent k) const;
  /// Exact division by a nonzero integer; throws NotDivisible otherwise.
  LaurentPoly divide_exact(const BigInt& c) const;
  /// Exact division by a unit q^k.
  LaurentPoly divide_exact_by_q_power(Exponent k) const { return shift(-k); }
  /// Exact division by an arbitrary nonzero Laurent polynomial; throws
  /// NotDivisible when a remainder is left.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  /// True when every exponent is >= 0 (a genuine polynomial in q).
  bool is_polynomial() const;
  bool has_nonnegative_coefficients() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  /// this += c * q^k * other, without temporaries
  void add_scaled(const LaurentPoly& other, const BigInt& c, Exponent k);
  /// this += factor * other
  void add_product(const LaurentPoly& factor, const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  /// Canonical text form, increasing exponent: `3*q^-1 + 1 + 2*q^2`.
  std::string str() const;
  /// Exponent -> coefficient, string keys; coefficients stay JSON integers
  /// while they fit in 64 bits and become decimal strings beyond that.
  nlohmann::ordered_json to_json() const;
  static LaurentPoly from_json(const nlohmann::ordered_json& j);

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Checked exponent addition.
LaurentPoly::Exponent add_exponents(LaurentPoly::Exponent a, LaurentPoly::Exponent b);

inline bool is_zero_scalar(const LaurentPoly& p) { return p.is_zero(); }
inline bool is_zero_scalar(const BigInt& c) { return c == 0; }

}  // namespace satake
