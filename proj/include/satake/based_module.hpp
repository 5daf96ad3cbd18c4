#pragma once

#include <functional>
#include <map>
#include <utility>

#include "satake/laurent.hpp"

namespace satake {

/// Free module element with basis keys K and scalars S (LaurentPoly or
/// BigInt). Keys with zero coefficient are never stored, so `==` compares
/// elements exactly. Iteration order is the key order, which is what makes
/// printing and serialization canonical.
template <class K, class S = LaurentPoly, class Compare = std::less<K>>
class BasedModule {
 public:
  using Key = K;
  using Scalar = S;
  using Map = std::map<K, S, Compare>;

  BasedModule() = default;

  static BasedModule basis(const K& key, const S& coeff = S(1)) {
    BasedModule m;
    m.add_term(key, coeff);
    return m;
  }

  void add_term(const K& key, const S& coeff) {
    if (is_zero_scalar(coeff)) return;
    auto [it, inserted] = coeffs_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (is_zero_scalar(it->second)) coeffs_.erase(it);
    }
  }

  /// coefficient of `key`, zero if absent
  S coeff(const K& key) const {
    auto it = coeffs_.find(key);
    return it == coeffs_.end() ? S() : it->second;
  }

  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  const Map& terms() const { return coeffs_; }
  auto begin() const { return coeffs_.begin(); }
  auto end() const { return coeffs_.end(); }

  BasedModule& operator+=(const BasedModule& other) {
    for (const auto& [k, c] : other.coeffs_) add_term(k, c);
    return *this;
  }
  BasedModule& operator-=(const BasedModule& other) {
    for (const auto& [k, c] : other.coeffs_) add_term(k, -c);
    return *this;
  }
  friend BasedModule operator+(BasedModule a, const BasedModule& b) { return a += b; }
  friend BasedModule operator-(BasedModule a, const BasedModule& b) { return a -= b; }
  BasedModule operator-() const {
    BasedModule m;
    for (const auto& [k, c] : coeffs_) m.coeffs_.emplace(k, -c);
    return m;
  }

  BasedModule scaled(const S& s) const {
    BasedModule m;
    if (is_zero_scalar(s)) return m;
    for (const auto& [k, c] : coeffs_) m.add_term(k, c * s);
    return m;
  }

  /// Relabels keys through `f`; colliding images are summed.
  template <class K2, class C2 = std::less<K2>, class F>
  BasedModule<K2, S, C2> map_basis(F&& f) const {
    BasedModule<K2, S, C2> out;
    for (const auto& [k, c] : coeffs_) out.add_term(f(k), c);
    return out;
  }

  friend bool operator==(const BasedModule& a, const BasedModule& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  Map coeffs_;
};

/// Extends a key-level product `key_product(k1, k2) -> BasedModule` to all
/// of a and b by bilinearity.
template <class K, class S, class C, class F>
BasedModule<K, S, C> bilinear_extend(const BasedModule<K, S, C>& a, const BasedModule<K, S, C>& b,
                                     F&& key_product) {
  BasedModule<K, S, C> out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      const S scale = ca * cb;
      for (const auto& [k, c] : key_product(ka, kb)) out.add_term(k, c * scale);
    }
  }
  return out;
}

}  // namespace satake
