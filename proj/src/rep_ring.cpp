#include "satake/rep_ring.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "satake/errors.hpp"

namespace satake {

RepRing::RepRing(const RootDatum& rd, Options options) : weyl_(rd), options_(options) {
  two_rho_hat_ = rd.two_rho_check();
}

LaurentPoly RepRing::partition_coords(const LatticeVec& coords, std::size_t upto) const {
  for (auto c : coords)
    if (c < 0) return {};
  if (upto == 0) return is_zero(coords) ? LaurentPoly(1) : LaurentPoly();
  if (is_zero(coords)) return 1;
  {
    std::lock_guard lock(memo_mutex_);
    auto it = memo_.find({coords, upto});
    if (it != memo_.end()) return it->second;
  }
  // Either the last allowed coroot is unused, or it is used at least once.
  const LatticeVec& beta = datum().positive_coroot_coords()[upto - 1];
  LaurentPoly result = partition_coords(coords, upto - 1);
  result.add_scaled(partition_coords(coords - beta, upto), 1, 1);
  std::lock_guard lock(memo_mutex_);
  memo_.emplace(MemoKey{coords, upto}, result);
  return result;
}

LaurentPoly RepRing::kostant_partition(const LatticeVec& v, bool q_graded) const {
  auto coords = datum().coroot_coordinates(v);
  if (!coords) return {};
  LaurentPoly p = partition_coords(*coords, datum().positive_coroots().size());
  return q_graded ? p : LaurentPoly(p.eval_at_one());
}

namespace {

// v = (w(2a) - 2b) / 2, or nullopt if some coordinate is odd.
std::optional<LatticeVec> halve(const LatticeVec& doubled) {
  LatticeVec out(doubled.size());
  for (std::size_t i = 0; i < doubled.size(); ++i) {
    if (doubled[i] % 2 != 0) return std::nullopt;
    out[i] = doubled[i] / 2;
  }
  return out;
}

}  // namespace

LaurentPoly RepRing::lusztig_q_analog(const DominantCocharacter& mu, const LatticeVec& lam) const {
  if (mu.datum() != datum().fingerprint()) throw std::invalid_argument("cocharacter of another root datum");
  // rho^ may be half-integral, so work with 2(mu + rho^) and 2(lam + rho^).
  const LatticeVec top = scaled(mu.value(), 2) + two_rho_hat_;
  const LatticeVec base = scaled(lam, 2) + two_rho_hat_;
  LaurentPoly m;
  for (std::size_t w = 0; w < weyl_.size(); ++w) {
    auto v = halve(weyl_.apply(w, top) - base);
    if (!v) continue;
    LaurentPoly p = kostant_partition(*v, true);
    if (weyl_.length(w) % 2) p = -p;
    m += p;
  }
  if (options_.corrupt_q_analog && lam != mu.value() && !m.is_zero()) m += LaurentPoly::q() - 1;
  return m;
}

std::int64_t RepRing::weight_multiplicity(const DominantCocharacter& mu, const LatticeVec& lam) const {
  const LatticeVec top = scaled(mu.value(), 2) + two_rho_hat_;
  const LatticeVec base = scaled(lam, 2) + two_rho_hat_;
  BigInt m = 0;
  for (std::size_t w = 0; w < weyl_.size(); ++w) {
    auto v = halve(weyl_.apply(w, top) - base);
    if (!v) continue;
    BigInt p = kostant_partition(*v, false).eval_at_one();
    m += weyl_.length(w) % 2 ? -p : p;
  }
  if (m < 0) throw InternalError("negative weight multiplicity");
  return static_cast<std::int64_t>(m);
}

std::vector<LatticeVec> RepRing::dominant_weights(const DominantCocharacter& mu) const {
  const RootDatum& rd = datum();
  // The weights of V_mu form the saturated set generated by mu; strings are
  // followed from dominant weights only and folded back by dominant conjugation.
  std::set<LatticeVec, LatticeVecLess> seen{mu.value()};
  std::deque<LatticeVec> queue{mu.value()};
  while (!queue.empty()) {
    const LatticeVec lam = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < rd.positive_coroots().size(); ++j) {
      const std::int64_t m = dot(rd.root_pairing_row(j), lam);
      for (std::int64_t k = 1; k <= m; ++k) {
        LatticeVec y = weyl_.dominant_conjugate(lam - scaled(rd.positive_coroots()[j], k));
        if (seen.insert(y).second) queue.push_back(std::move(y));
      }
    }
  }
  std::vector<LatticeVec> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [&](const LatticeVec& a, const LatticeVec& b) {
    return d_pairing(rd, a) > d_pairing(rd, b);
  });
  return out;
}

Character RepRing::character(const DominantCocharacter& mu) const {
  Character chi;
  for (const auto& lam : dominant_weights(mu)) {
    const std::int64_t m = weight_multiplicity(mu, lam);
    if (m == 0) continue;
    for (const auto& x : weyl_.orbit(lam)) chi[x] = m;
  }
  return chi;
}

std::int64_t RepRing::weyl_dim(const DominantCocharacter& mu) const {
  std::int64_t total = 0;
  for (const auto& [x, m] : character(mu)) total += m;
  return total;
}

TensorDecomposition RepRing::tensor_decompose(const DominantCocharacter& mu,
                                              const DominantCocharacter& lam) const {
  const RootDatum& rd = datum();
  const Character a = character(mu);
  const Character b = character(lam);
  Character rest;
  for (const auto& [x, m] : a)
    for (const auto& [y, n] : b) rest[x + y] += m * n;

  TensorDecomposition out;
  while (!rest.empty()) {
    // A weight of maximal height in a W0-invariant multiset is dominant.
    auto top = rest.begin();
    std::int64_t best = d_pairing(rd, top->first);
    for (auto it = std::next(rest.begin()); it != rest.end(); ++it) {
      const std::int64_t d = d_pairing(rd, it->first);
      if (d > best || (d == best && compare_vec(it->first, top->first) > 0)) {
        top = it;
        best = d;
      }
    }
    const LatticeVec nu = top->first;
    const std::int64_t n = top->second;
    if (n < 0 || !rd.is_dominant(nu)) throw InternalError("tensor extraction reached " + format_vec(nu));
    out[nu] = n;
    for (const auto& [x, m] : character(DominantCocharacter(rd, nu))) {
      auto it = rest.find(x);
      const std::int64_t left = (it == rest.end() ? 0 : it->second) - n * m;
      if (left < 0) throw InternalError("tensor extraction drove " + format_vec(x) + " negative");
      if (left == 0) {
        rest.erase(it);
      } else {
        it->second = left;
      }
    }
  }
  return out;
}

G1RepClass RepRing::g1_class(const LatticeVec& mu, std::int64_t k) const {
  const std::int64_t d = d_pairing(datum(), mu);
  if ((k - d) % 2 != 0) {
    throw std::invalid_argument("G1 class " + format_vec(mu) + " with k=" + std::to_string(k) +
                                " violates k = <2rho,mu> mod 2");
  }
  return {mu, k};
}

G1RepClass RepRing::key_of(const DominantCocharacter& mu, std::int64_t n) const {
  return g1_class(mu.value(), 2 * n - d_pairing(datum(), mu));
}

G1RingElement RepRing::g1_mul(const G1RingElement& a, const G1RingElement& b) const {
  const RootDatum& rd = datum();
  return bilinear_extend(a, b, [&](const G1RepClass& x, const G1RepClass& y) {
    G1RingElement out;
    for (const auto& [nu, n] : tensor_decompose(DominantCocharacter(rd, x.mu), DominantCocharacter(rd, y.mu))) {
      G1RepClass key{nu, x.k + y.k};
      if ((key.k - d_pairing(rd, nu)) % 2 != 0) throw InternalError("parity violation in g1_mul");
      out.add_term(key, LaurentPoly(static_cast<long long>(n)));
    }
    return out;
  });
}

G1RingElement quotient_normal_form(const G1RingElement& x) {
  G1RingElement out;
  for (const auto& [key, c] : x) {
    const std::int64_t r = ((key.k % 2) + 2) % 2;
    out.add_term({key.mu, r}, c.shift(-(key.k - r) / 2));
  }
  return out;
}

std::string format_g1(const G1RepClass& key) {
  return "V[" + format_vec(key.mu) + "](" + std::to_string(key.k) + ")";
}

std::string format_g1(const G1RingElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [key, c] : x) {
    if (!out.empty()) out += " + ";
    if (c != LaurentPoly(1)) out += (c.size() == 1 ? c.str() : "(" + c.str() + ")") + "*";
    out += format_g1(key);
  }
  return out;
}

nlohmann::ordered_json g1_to_json(const G1RingElement& x) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [key, c] : x) {
    nlohmann::ordered_json t;
    t["mu"] = vec_to_json(key.mu);
    t["k"] = key.k;
    t["poly"] = c.to_json();
    terms.push_back(std::move(t));
  }
  return {{"basis", "G1"}, {"terms", std::move(terms)}};
}

nlohmann::ordered_json character_to_json(const Character& chi) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [x, m] : chi) j[format_vec(x)] = m;
  return j;
}

}  // namespace satake
