#include "satake/oracles.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <set>
#include <stdexcept>

#include "satake/errors.hpp"

namespace satake::oracle {

using boost::multiprecision::cpp_rational;

LatticeVec two_rho_by_summation(const RootDatum& rd) {
  LatticeVec sum = zero_vec(rd.rank());
  for (const auto& alpha : rd.positive_roots()) sum = sum + alpha;
  return sum;
}

std::int64_t d_by_summation(const RootDatum& rd, const LatticeVec& x) {
  std::int64_t d = 0;
  for (const auto& alpha : rd.positive_roots()) d += rd.pair(alpha, x);
  return d;
}

namespace {

LatticeVec reflect(const RootDatum& rd, std::size_t i, const LatticeVec& x) {
  return x - scaled(rd.simple_coroots()[i], rd.pair(rd.simple_roots()[i], x));
}

std::int64_t form(const RootDatum& rd, const LatticeVec& x, const LatticeVec& y) {
  std::int64_t s = 0;
  for (const auto& alpha : rd.positive_roots()) s += rd.pair(alpha, x) * rd.pair(alpha, y);
  return s;
}

}  // namespace

LatticeVec dominant_conjugate(const RootDatum& rd, const LatticeVec& x) {
  LatticeVec y = x;
  for (;;) {
    std::size_t i = 0;
    while (i < rd.semisimple_rank() && rd.pair(rd.simple_roots()[i], y) >= 0) ++i;
    if (i == rd.semisimple_rank()) return y;
    y = reflect(rd, i, y);
  }
}

std::vector<LatticeVec> dominant_weights(const RootDatum& rd, const LatticeVec& mu) {
  const LatticeVec lowest = -dominant_conjugate(rd, -mu);
  auto span = rd.coroot_coordinates(mu - lowest);
  if (!span) throw InternalError("mu - w0 mu outside the coroot lattice");
  const std::size_t s = span->size();
  std::vector<LatticeVec> out;
  LatticeVec c(s, 0);
  for (;;) {
    LatticeVec lam = mu;
    for (std::size_t i = 0; i < s; ++i) lam = lam - scaled(rd.simple_coroots()[i], c[i]);
    if (rd.is_dominant(lam)) out.push_back(lam);
    std::size_t i = 0;
    while (i < s && c[i] == (*span)[i]) c[i++] = 0;
    if (i == s) break;
    ++c[i];
  }
  return out;
}

std::map<LatticeVec, std::int64_t, LatticeVecLess> freudenthal(const RootDatum& rd, const LatticeVec& mu) {
  std::vector<LatticeVec> dom = dominant_weights(rd, mu);
  std::set<LatticeVec, LatticeVecLess> support(dom.begin(), dom.end());
  // Process from the top: a weight only depends on strictly higher ones.
  std::stable_sort(dom.begin(), dom.end(), [&](const LatticeVec& a, const LatticeVec& b) {
    return d_by_summation(rd, a) > d_by_summation(rd, b);
  });
  std::map<LatticeVec, std::int64_t, LatticeVecLess> mult;
  auto lookup = [&](const LatticeVec& x) -> std::int64_t {
    const LatticeVec d = dominant_conjugate(rd, x);
    if (!support.count(d)) return 0;
    auto it = mult.find(d);
    if (it == mult.end()) throw InternalError("Freudenthal order violated");
    return it->second;
  };
  // 2 rho^ keeps everything integral: (mu + rho^, mu + rho^) = (M, M) / 4.
  const LatticeVec two_rho_hat = rd.two_rho_check();
  const LatticeVec top = scaled(mu, 2) + two_rho_hat;
  const std::int64_t top_norm = form(rd, top, top);
  for (const auto& lam : dom) {
    if (lam == mu) {
      mult[lam] = 1;
      continue;
    }
    const LatticeVec base = scaled(lam, 2) + two_rho_hat;
    const std::int64_t lhs = top_norm - form(rd, base, base);
    std::int64_t rhs = 0;
    for (const auto& beta : rd.positive_coroots()) {
      for (std::int64_t k = 1;; ++k) {
        const LatticeVec x = lam + scaled(beta, k);
        const std::int64_t m = lookup(x);
        if (m == 0) break;
        rhs += 8 * form(rd, x, beta) * m;
      }
    }
    if (lhs <= 0 || rhs % lhs != 0) throw InternalError("Freudenthal division failed at " + format_vec(lam));
    mult[lam] = rhs / lhs;
  }
  return mult;
}

std::int64_t weyl_dimension(const RootDatum& rd, const LatticeVec& mu) {
  const LatticeVec two_rho_hat = rd.two_rho_check();
  const LatticeVec top = scaled(mu, 2) + two_rho_hat;
  cpp_rational dim = 1;
  for (const auto& alpha : rd.positive_roots()) {
    dim *= cpp_rational(rd.pair(alpha, top), rd.pair(alpha, two_rho_hat));
  }
  if (denominator(dim) != 1) throw InternalError("Weyl dimension is not an integer");
  return static_cast<std::int64_t>(numerator(dim));
}

TensorDecomposition racah_speiser(const RootDatum& rd, const LatticeVec& mu, const LatticeVec& lam) {
  // Full character of V_lam: each dominant weight spread over its orbit.
  std::map<LatticeVec, std::int64_t, LatticeVecLess> chi;
  for (const auto& [d, m] : freudenthal(rd, lam)) {
    std::set<LatticeVec, LatticeVecLess> orbit{d};
    std::vector<LatticeVec> stack{d};
    while (!stack.empty()) {
      LatticeVec x = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
        LatticeVec y = reflect(rd, i, x);
        if (orbit.insert(y).second) stack.push_back(y);
      }
    }
    for (const auto& x : orbit) chi[x] = m;
  }
  // Reflect 2(mu + x) + 2 rho^ into the dominant chamber with sign; walls contribute 0.
  const LatticeVec two_rho_hat = rd.two_rho_check();
  std::map<LatticeVec, std::int64_t, LatticeVecLess> acc;
  for (const auto& [x, m] : chi) {
    LatticeVec y = scaled(mu + x, 2) + two_rho_hat;
    int sign = 1;
    bool wall = false;
    for (;;) {
      std::size_t i = 0;
      while (i < rd.semisimple_rank() && rd.pair(rd.simple_roots()[i], y) > 0) ++i;
      if (i == rd.semisimple_rank()) break;
      if (rd.pair(rd.simple_roots()[i], y) == 0) {
        wall = true;
        break;
      }
      y = reflect(rd, i, y);
      sign = -sign;
    }
    if (wall) continue;
    LatticeVec nu2 = y - two_rho_hat;
    LatticeVec nu(nu2.size());
    for (std::size_t i = 0; i < nu2.size(); ++i) nu[i] = nu2[i] / 2;
    acc[nu] += sign * m;
  }
  TensorDecomposition out;
  for (const auto& [nu, n] : acc) {
    if (n < 0) throw InternalError("negative Brauer-Klimyk multiplicity");
    if (n > 0) out[nu] = n;
  }
  return out;
}

}  // namespace satake::oracle
