#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "json.hpp"
#include "satake/based_module.hpp"
#include "satake/laurent.hpp"
#include "satake/rep_ring.hpp"
#include "satake/root_datum.hpp"
#include "satake/satake_k0.hpp"
#include "satake/weyl.hpp"

namespace satake {

/// Element of the Iwahori-Hecke algebra in the basis T_w.
using HeckeElement = BasedModule<AffineWeylElement, LaurentPoly>;
/// Element of the spherical Hecke algebra in the basis c_mu of double coset indicators.
using SatakeFunction = BasedModule<DominantCocharacter, LaurentPoly>;
/// Coefficients a_nu of sum_nu a_nu f_{IC_nu(0)}.
using IcExpansion = BasedModule<DominantCocharacter, LaurentPoly>;

/// Iwahori-Hecke algebra of an extended affine Weyl group with
/// T_s^2 = (q - 1) T_s + q T_e. Borrows the group, which must outlive it.
class IwahoriHecke {
 public:
  struct Options {
    std::size_t max_length = 64;
  };

  explicit IwahoriHecke(const AffineWeylGroup& group) : IwahoriHecke(group, Options{}) {}
  IwahoriHecke(const AffineWeylGroup& group, Options options);

  const AffineWeylGroup& group() const { return group_; }
  HeckeElement T(const AffineWeylElement& x) const { return HeckeElement::basis(x); }
  HeckeElement unit() const { return T(group_.identity()); }

  /// h * T_{s_i}
  HeckeElement mul_simple(const HeckeElement& h, std::size_t i) const;
  /// a * b by right multiplication with the reduced word of every key of b.
  /// Throws std::length_error for keys longer than the configured bound.
  HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) const;

  /// Sum of T_w over W0 t_mu W0.
  HeckeElement spherical_indicator(const DominantCocharacter& mu) const;
  /// sum_{w in W0} q^{l(w)}
  const LaurentPoly& poincare() const { return poincare_; }

  /// `T[s1s0]`, `T[e]`, `T[s0·t[1]·s1]` when an Omega part is present.
  std::string key_label(const AffineWeylElement& x) const;
  std::string format(const HeckeElement& h) const;
  nlohmann::ordered_json to_json(const HeckeElement& h) const;

 private:
  void check_length(const AffineWeylElement& x) const;

  const AffineWeylGroup& group_;
  Options options_;
  LaurentPoly poincare_;
};

enum class SignConvention { Unsigned, Signed };

struct ConvolutionRecord {
  ICClass a;
  ICClass b;
  K0Element product;
};

/// Spherical Hecke algebra of a root datum with both multiplication paths,
/// the IC trace functions and the Satake transform. Caches are write-once per
/// key and guarded, so a const instance may be shared between threads.
class SphericalHecke {
 public:
  struct Options {
    SignConvention sign = SignConvention::Unsigned;
    bool corrupt_q_analog = false;
    AffineWeylGroup::Options weyl{};
    std::size_t max_length = 64;
  };

  explicit SphericalHecke(const RootDatum& rd) : SphericalHecke(rd, Options{}) {}
  SphericalHecke(const RootDatum& rd, Options options);
  SphericalHecke(const SphericalHecke&) = delete;
  SphericalHecke& operator=(const SphericalHecke&) = delete;

  const RootDatum& datum() const { return group_->datum(); }
  const AffineWeylGroup& affine() const { return *group_; }
  const IwahoriHecke& iwahori() const { return *iwahori_; }
  const RepRing& rep() const { return *rep_; }
  SignConvention sign_convention() const { return options_.sign; }

  DominantCocharacter dominant(const LatticeVec& mu) const { return DominantCocharacter(datum(), mu); }
  /// sigma(mu): +1, or (-1)^{<2 rho, mu>} under the signed convention.
  int sign(const DominantCocharacter& mu) const;
  SatakeFunction c(const DominantCocharacter& mu) const { return SatakeFunction::basis(mu); }

  /// h_{mu,lam}(q) = q^{<rho, mu - lam>} m_mu^lam(1/q) for lam <= mu, else 0.
  LaurentPoly raw_stalk_polynomial(const DominantCocharacter& mu, const DominantCocharacter& lam) const;
  /// As above; throws InternalError when h has a negative exponent.
  LaurentPoly stalk_polynomial(const DominantCocharacter& mu, const DominantCocharacter& lam) const;
  /// f_{IC_mu(n)} = sigma(mu) q^{-n} sum_{lam <= mu} h_{mu,lam} c_lam.
  SatakeFunction ic_function(const DominantCocharacter& mu, std::int64_t n = 0) const;

  /// Back-substitution along dominance: f = sum a_nu f_{IC_nu(0)}.
  IcExpansion to_ic(const SatakeFunction& f) const;
  SatakeFunction from_ic(const IcExpansion& a) const;

  /// c_mu * c_lam = P_W0(q)^{-1} 1_{K mu K} * 1_{K lam K} in the Iwahori-Hecke algebra.
  SatakeFunction spherical_mul_iwahori_path(const DominantCocharacter& mu, const DominantCocharacter& lam) const;
  /// c_mu * c_lam through the IC basis and convolve_ic. Each IC convolution
  /// performed is appended to `log` when given.
  SatakeFunction spherical_mul_satake_path(const DominantCocharacter& mu, const DominantCocharacter& lam,
                                           std::vector<ConvolutionRecord>* log = nullptr) const;
  /// Bilinear extension of the Satake path.
  SatakeFunction multiply(const SatakeFunction& a, const SatakeFunction& b) const;
  /// Bilinear extension of the Iwahori path.
  SatakeFunction multiply_iwahori(const SatakeFunction& a, const SatakeFunction& b) const;

  /// Image in R(G^_1)/([d^{-1}] - q), in quotient normal form.
  G1RingElement satake_transform(const SatakeFunction& f) const;
  SatakeFunction inverse_satake_transform(const G1RingElement& x) const;

  std::string format(const SatakeFunction& f) const;
  nlohmann::ordered_json to_json(const SatakeFunction& f) const;

 private:
  Options options_;
  std::unique_ptr<AffineWeylGroup> group_;
  std::unique_ptr<IwahoriHecke> iwahori_;
  std::unique_ptr<RepRing> rep_;
  mutable std::mutex cache_mutex_;
  mutable std::map<LatticeVec, SatakeFunction, LatticeVecLess> ic_cache_;
  mutable std::map<LatticeVec, HeckeElement, LatticeVecLess> indicator_cache_;
};

/// Smallest of Z, Z[q], Z[q^-1], Z[q,q^-1] containing every coefficient.
std::string minimal_scalar_ring(const SatakeFunction& f);

/// Linear extension of ic_function.
SatakeFunction trace_to_hecke(const SphericalHecke& engine, const K0Element& x);

struct ParityRow {
  LatticeVec lam;
  LaurentPoly h;
  bool polynomial;
  bool nonnegative;
};
struct ParityReport {
  LatticeVec mu;
  std::int64_t d;
  std::vector<ParityRow> rows;
  std::size_t violations;
};
/// Stalk table of IC_mu: every h_{mu,lam} must be a polynomial in q with
/// nonnegative coefficients.
ParityReport parity_report(const SphericalHecke& engine, const DominantCocharacter& mu);

}  // namespace satake
