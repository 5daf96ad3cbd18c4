#include "satake/hecke.hpp"

#include <algorithm>
#include <stdexcept>

#include "satake/errors.hpp"

namespace satake {

IwahoriHecke::IwahoriHecke(const AffineWeylGroup& group, Options options) : group_(group), options_(options) {
  const FiniteWeylGroup& w0 = group_.finite();
  for (std::size_t w = 0; w < w0.size(); ++w) poincare_ += LaurentPoly::q_power(static_cast<std::int64_t>(w0.length(w)));
}

void IwahoriHecke::check_length(const AffineWeylElement& x) const {
  const std::size_t l = group_.length(x);
  if (l > options_.max_length) {
    throw std::length_error("Hecke key " + group_.format(x) + " of length " + std::to_string(l) +
                            " exceeds the bound " + std::to_string(options_.max_length));
  }
}

HeckeElement IwahoriHecke::mul_simple(const HeckeElement& h, std::size_t i) const {
  static const LaurentPoly q_minus_one = LaurentPoly::q() - 1;
  HeckeElement out;
  for (const auto& [w, c] : h) {
    AffineWeylElement ws = group_.right_simple(w, i);
    if (group_.length(ws) > group_.length(w)) {
      out.add_term(ws, c);
    } else {
      out.add_term(w, c * q_minus_one);
      out.add_term(ws, c.shift(1));
    }
  }
  return out;
}

HeckeElement IwahoriHecke::multiply(const HeckeElement& a, const HeckeElement& b) const {
  for (const auto& [x, c] : a) check_length(x);
  for (const auto& [y, d] : b) check_length(y);
  HeckeElement out;
  for (const auto& [y, d] : b) {
    const ReducedDecomposition rw = group_.reduced_word(y);
    HeckeElement h = a;
    for (auto i : rw.word) h = mul_simple(h, i);
    // Length-zero elements act on keys by translation.
    for (const auto& [z, c] : h) out.add_term(group_.multiply(z, rw.omega), c * d);
  }
  return out;
}

HeckeElement IwahoriHecke::spherical_indicator(const DominantCocharacter& mu) const {
  HeckeElement out;
  for (const auto& x : group_.spherical_double_coset(mu).elements) out.add_term(x, 1);
  return out;
}

std::string IwahoriHecke::key_label(const AffineWeylElement& x) const {
  const ReducedDecomposition rw = group_.reduced_word(x);
  if (rw.omega == group_.identity()) return group_.affine_word_string(rw.word);
  if (rw.word.empty()) return group_.format(rw.omega);
  return group_.affine_word_string(rw.word) + "·" + group_.format(rw.omega);
}

namespace {

std::string coefficient_prefix(const LaurentPoly& c) {
  if (c == LaurentPoly(1)) return "";
  if (c == LaurentPoly(-1)) return "-";
  return (c.size() == 1 ? c.str() : "(" + c.str() + ")") + "*";
}

}  // namespace

std::string IwahoriHecke::format(const HeckeElement& h) const {
  if (h.is_zero()) return "0";
  std::string out;
  for (const auto& [x, c] : h) {
    if (!out.empty()) out += " + ";
    out += coefficient_prefix(c) + "T[" + key_label(x) + "]";
  }
  return out;
}

nlohmann::ordered_json IwahoriHecke::to_json(const HeckeElement& h) const {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [x, c] : h) {
    terms.push_back({{"key", group_.to_json(x)}, {"poly", c.to_json()}});
  }
  return {{"basis", "T"}, {"terms", std::move(terms)}};
}

SphericalHecke::SphericalHecke(const RootDatum& rd, Options options)
    : options_(options),
      group_(std::make_unique<AffineWeylGroup>(rd, options.weyl)),
      iwahori_(std::make_unique<IwahoriHecke>(*group_, IwahoriHecke::Options{options.max_length})),
      rep_(std::make_unique<RepRing>(rd, RepRing::Options{options.corrupt_q_analog})) {}

int SphericalHecke::sign(const DominantCocharacter& mu) const {
  if (options_.sign == SignConvention::Unsigned) return 1;
  return parity(datum(), mu) ? -1 : 1;
}

LaurentPoly SphericalHecke::raw_stalk_polynomial(const DominantCocharacter& mu,
                                                 const DominantCocharacter& lam) const {
  if (!dominance_leq(datum(), lam, mu)) return {};
  // <rho, mu - lam> is half of <2 rho, mu - lam>, an integer on the coroot lattice.
  const std::int64_t height = d_pairing(datum(), mu.value() - lam.value()) / 2;
  return rep_->lusztig_q_analog(mu, lam.value()).invert_q().shift(height);
}

LaurentPoly SphericalHecke::stalk_polynomial(const DominantCocharacter& mu, const DominantCocharacter& lam) const {
  LaurentPoly h = raw_stalk_polynomial(mu, lam);
  if (!h.is_polynomial()) {
    throw InternalError("stalk polynomial h_{" + format_vec(mu.value()) + "," + format_vec(lam.value()) +
                        "} = " + h.str() + " has negative exponents");
  }
  return h;
}

SatakeFunction SphericalHecke::ic_function(const DominantCocharacter& mu, std::int64_t n) const {
  SatakeFunction base;
  bool cached = false;
  {
    std::lock_guard lock(cache_mutex_);
    auto it = ic_cache_.find(mu.value());
    if (it != ic_cache_.end()) {
      base = it->second;
      cached = true;
    }
  }
  if (!cached) {
    const int s = sign(mu);
    for (const auto& lam : rep_->dominant_weights(mu)) {
      const DominantCocharacter l = dominant(lam);
      LaurentPoly h = stalk_polynomial(mu, l);
      base.add_term(l, s < 0 ? -h : h);
    }
    std::lock_guard lock(cache_mutex_);
    ic_cache_.emplace(mu.value(), base);
  }
  if (n == 0) return base;
  return base.scaled(LaurentPoly::q_power(-n));
}

namespace {

// Key of maximal <2 rho, .>; dominance-larger keys have strictly larger height.
template <class Module>
typename Module::Map::const_iterator top_key(const RootDatum& rd, const Module& m) {
  auto best = m.begin();
  std::int64_t best_d = d_pairing(rd, best->first);
  for (auto it = std::next(m.begin()); it != m.end(); ++it) {
    const std::int64_t d = d_pairing(rd, it->first);
    if (d > best_d) {
      best = it;
      best_d = d;
    }
  }
  return best;
}

}  // namespace

IcExpansion SphericalHecke::to_ic(const SatakeFunction& f) const {
  IcExpansion out;
  SatakeFunction rest = f;
  while (!rest.is_zero()) {
    const auto top = top_key(datum(), rest);
    const DominantCocharacter nu = top->first;
    // The leading coefficient of f_{IC_nu(0)} is sigma(nu) = +-1.
    const LaurentPoly a = sign(nu) < 0 ? -top->second : top->second;
    out.add_term(nu, a);
    rest -= ic_function(nu).scaled(a);
    if (!rest.coeff(nu).is_zero()) throw InternalError("IC basis change is not unitriangular at " + format_vec(nu.value()));
  }
  return out;
}

SatakeFunction SphericalHecke::from_ic(const IcExpansion& a) const {
  SatakeFunction out;
  for (const auto& [nu, c] : a) out += ic_function(nu).scaled(c);
  return out;
}

SatakeFunction SphericalHecke::spherical_mul_iwahori_path(const DominantCocharacter& mu,
                                                          const DominantCocharacter& lam) const {
  auto indicator = [&](const DominantCocharacter& x) {
    {
      std::lock_guard lock(cache_mutex_);
      auto it = indicator_cache_.find(x.value());
      if (it != indicator_cache_.end()) return it->second;
    }
    HeckeElement h = iwahori_->spherical_indicator(x);
    std::lock_guard lock(cache_mutex_);
    indicator_cache_.emplace(x.value(), h);
    return h;
  };
  const HeckeElement product = iwahori_->multiply(indicator(mu), indicator(lam));

  HeckeElement normalized;
  for (const auto& [x, c] : product) {
    try {
      normalized.add_term(x, c.divide_exact(iwahori_->poincare()));
    } catch (const NotDivisible&) {
      throw InternalError("coefficient " + c.str() + " of " + group_->format(x) +
                          " is not divisible by the Poincare polynomial");
    }
  }

  // Read c_nu off the minimal element of each double coset, then demand that
  // the indicators reproduce the whole product.
  std::map<LatticeVec, bool, LatticeVecLess> cosets;
  for (const auto& [x, c] : normalized) cosets[group_->finite().dominant_conjugate(x.translation)] = true;
  SatakeFunction out;
  HeckeElement rebuilt;
  for (const auto& [nu_value, unused] : cosets) {
    const DominantCocharacter nu = dominant(nu_value);
    const DoubleCoset coset = group_->spherical_double_coset(nu);
    const LaurentPoly a = normalized.coeff(coset.minimal);
    out.add_term(nu, a);
    for (const auto& x : coset.elements) rebuilt.add_term(x, a);
  }
  if (!(rebuilt == normalized)) {
    throw InternalError("product of " + format_vec(mu.value()) + " and " + format_vec(lam.value()) +
                        " is not bi-invariant");
  }
  return out;
}

SatakeFunction SphericalHecke::spherical_mul_satake_path(const DominantCocharacter& mu,
                                                         const DominantCocharacter& lam,
                                                         std::vector<ConvolutionRecord>* log) const {
  const IcExpansion a = to_ic(c(mu));
  const IcExpansion b = to_ic(c(lam));
  IcExpansion product;
  for (const auto& [x, ca] : a) {
    for (const auto& [y, cb] : b) {
      const ICClass ix{x.value(), 0};
      const ICClass iy{y.value(), 0};
      K0Element conv = convolve_ic(*rep_, ix, iy);
      const LaurentPoly scale = ca * cb;
      for (const auto& [z, n] : conv) {
        // f_{IC_z(n)} = q^{-n} f_{IC_z(0)}
        product.add_term(dominant(z.mu), scale.shift(-z.n) * LaurentPoly(n));
      }
      if (log) log->push_back({ix, iy, std::move(conv)});
    }
  }
  return from_ic(product);
}

SatakeFunction SphericalHecke::multiply(const SatakeFunction& a, const SatakeFunction& b) const {
  return bilinear_extend(a, b, [&](const DominantCocharacter& x, const DominantCocharacter& y) {
    return spherical_mul_satake_path(x, y);
  });
}

SatakeFunction SphericalHecke::multiply_iwahori(const SatakeFunction& a, const SatakeFunction& b) const {
  return bilinear_extend(a, b, [&](const DominantCocharacter& x, const DominantCocharacter& y) {
    return spherical_mul_iwahori_path(x, y);
  });
}

G1RingElement SphericalHecke::satake_transform(const SatakeFunction& f) const {
  G1RingElement out;
  for (const auto& [nu, a] : to_ic(f)) out.add_term(rep_->key_of(nu, 0), a);
  return quotient_normal_form(out);
}

SatakeFunction SphericalHecke::inverse_satake_transform(const G1RingElement& x) const {
  SatakeFunction out;
  for (const auto& [key, p] : quotient_normal_form(x)) {
    const DominantCocharacter nu = dominant(key.mu);
    // nf(key_of(nu, 0)) = q^{(d + r)/2} (nu, r)
    const std::int64_t e = (d_pairing(datum(), nu) + key.k) / 2;
    out += ic_function(nu).scaled(p.shift(-e));
  }
  return out;
}

std::string SphericalHecke::format(const SatakeFunction& f) const {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [nu, c] : f) {
    if (!out.empty()) out += " + ";
    out += coefficient_prefix(c) + "c[" + format_vec(nu.value()) + "]";
  }
  return out;
}

nlohmann::ordered_json SphericalHecke::to_json(const SatakeFunction& f) const {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [nu, c] : f) terms.push_back({{"key", vec_to_json(nu.value())}, {"poly", c.to_json()}});
  return {{"basis", "c"}, {"terms", std::move(terms)}};
}

std::string minimal_scalar_ring(const SatakeFunction& f) {
  bool positive = false, negative = false;
  for (const auto& [nu, c] : f) {
    if (c.is_zero()) continue;
    positive = positive || *c.max_exponent() > 0;
    negative = negative || *c.min_exponent() < 0;
  }
  if (positive && negative) return "Z[q,q^-1]";
  if (positive) return "Z[q]";
  if (negative) return "Z[q^-1]";
  return "Z";
}

}  // namespace satake
