#include "satake/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "satake/errors.hpp"

namespace satake {

namespace {

constexpr std::size_t kTableLimit = 1024;

IntMatrix simple_reflection_matrix(const RootDatum& rd, std::size_t i) {
  const std::size_t r = rd.rank();
  const LatticeVec row = rd.pairing_matrix().transpose().apply(rd.simple_roots()[i]);
  const LatticeVec& cor = rd.simple_coroots()[i];
  IntMatrix m = IntMatrix::identity(r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) m(a, b) -= cor[a] * row[b];
  return m;
}

IntMatrix reflection_matrix(const RootDatum& rd, std::size_t j) {
  const std::size_t r = rd.rank();
  const LatticeVec& row = rd.root_pairing_row(j);
  const LatticeVec& cor = rd.positive_coroots()[j];
  IntMatrix m = IntMatrix::identity(r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) m(a, b) -= cor[a] * row[b];
  return m;
}

}  // namespace

FiniteWeylGroup::FiniteWeylGroup(const RootDatum& rd, std::size_t bound) : rd_(rd) {
  const std::size_t s = rd_.semisimple_rank();
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < s; ++i) gens.push_back(simple_reflection_matrix(rd_, i));

  // Breadth-first closure under left multiplication by simple reflections;
  // the BFS depth is the Coxeter length.
  elements_.push_back({IntMatrix::identity(rd_.rank()), {}, 0});
  index_.emplace(elements_.front().action, 0);
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (std::size_t i = 0; i < s; ++i) {
      IntMatrix m = gens[i] * elements_[head].action;
      if (index_.count(m)) continue;
      if (elements_.size() >= bound) {
        throw std::length_error("finite Weyl group of " + rd_.name() + " exceeds the bound " +
                                std::to_string(bound));
      }
      index_.emplace(m, elements_.size());
      elements_.push_back({std::move(m), {}, elements_[head].length + 1});
    }
  }
  const std::size_t n = elements_.size();

  if (n <= kTableLimit) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = index_.at(elements_[a].action * elements_[b].action);
  }

  // Greedy words: smallest left descent first.
  for (std::size_t w = 0; w < n; ++w) {
    std::size_t cur = w;
    std::vector<std::size_t> word;
    while (elements_[cur].length > 0) {
      bool found = false;
      for (std::size_t i = 0; i < s && !found; ++i) {
        const std::size_t next = multiply(simple(i), cur);
        if (elements_[next].length < elements_[cur].length) {
          word.push_back(i);
          cur = next;
          found = true;
        }
      }
      if (!found) throw InternalError("finite Weyl element without descent");
    }
    elements_[w].word = std::move(word);
  }

  inverse_.resize(n);
  for (std::size_t w = 0; w < n; ++w) {
    IntMatrix m = IntMatrix::identity(rd_.rank());
    for (auto it = elements_[w].word.rbegin(); it != elements_[w].word.rend(); ++it) m = m * gens[*it];
    inverse_[w] = index_.at(m);
  }

  for (std::size_t j = 0; j < rd_.positive_roots().size(); ++j) reflections_.push_back(index_.at(reflection_matrix(rd_, j)));

  std::set<LatticeVec> positive(rd_.positive_coroots().begin(), rd_.positive_coroots().end());
  const std::size_t np = rd_.positive_roots().size();
  inv_keeps_positive_.resize(n * np);
  for (std::size_t w = 0; w < n; ++w) {
    const IntMatrix& winv = elements_[inverse_[w]].action;
    for (std::size_t j = 0; j < np; ++j) {
      inv_keeps_positive_[w * np + j] = positive.count(winv.apply(rd_.positive_coroots()[j])) > 0;
    }
  }
  longest_ = static_cast<std::size_t>(
      std::max_element(elements_.begin(), elements_.end(),
                       [](const auto& a, const auto& b) { return a.length < b.length; }) -
      elements_.begin());
}

std::size_t FiniteWeylGroup::multiply(std::size_t a, std::size_t b) const {
  if (!table_.empty()) return table_[a * elements_.size() + b];
  return index_.at(elements_[a].action * elements_[b].action);
}

std::optional<std::size_t> FiniteWeylGroup::find(const IntMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<LatticeVec> FiniteWeylGroup::orbit(const LatticeVec& x) const {
  std::set<LatticeVec> seen{x};
  std::deque<LatticeVec> queue{x};
  const std::size_t s = rd_.semisimple_rank();
  while (!queue.empty()) {
    LatticeVec y = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < s; ++i) {
      LatticeVec z = elements_[simple(i)].action.apply(y);
      if (seen.insert(z).second) queue.push_back(z);
    }
  }
  return {seen.begin(), seen.end()};
}

LatticeVec FiniteWeylGroup::dominant_conjugate(const LatticeVec& x) const {
  LatticeVec y = x;
  const std::size_t s = rd_.semisimple_rank();
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i < s; ++i) {
      if (rd_.pair(rd_.simple_roots()[i], y) < 0) {
        y = elements_[simple(i)].action.apply(y);
        moved = true;
      }
    }
  }
  return y;
}

std::string FiniteWeylGroup::word_string(std::size_t w) const {
  const auto& word = elements_[w].word;
  if (word.empty()) return "e";
  std::string out;
  for (auto i : word) out += "s" + std::to_string(i + 1);
  return out;
}

std::vector<FiniteWeylElement> finite_weyl(const RootDatum& rd, std::size_t bound) {
  return FiniteWeylGroup(rd, bound).elements();
}

AffineWeylGroup::AffineWeylGroup(const RootDatum& rd, Options options)
    : finite_(rd, options.finite_bound), options_(options) {
  const std::size_t s = rd.semisimple_rank();
  for (std::size_t i = 0; i < s; ++i) simple_.push_back(from_finite(finite_.simple(i)));
  for (std::size_t h : rd.highest_roots()) {
    simple_.push_back({rd.positive_coroots()[h], static_cast<std::uint32_t>(finite_.reflection(h))});
  }
}

AffineWeylElement AffineWeylGroup::identity() const { return {zero_vec(datum().rank()), 0}; }

AffineWeylElement AffineWeylGroup::translation(const LatticeVec& lambda) const {
  if (lambda.size() != datum().rank()) throw std::invalid_argument("translation of wrong rank");
  return {lambda, 0};
}

AffineWeylElement AffineWeylGroup::from_finite(std::size_t w) const {
  return {zero_vec(datum().rank()), static_cast<std::uint32_t>(w)};
}

AffineWeylElement AffineWeylGroup::multiply(const AffineWeylElement& x, const AffineWeylElement& y) const {
  return {x.translation + finite_.apply(x.finite, y.translation),
          static_cast<std::uint32_t>(finite_.multiply(x.finite, y.finite))};
}

AffineWeylElement AffineWeylGroup::inverse(const AffineWeylElement& x) const {
  const std::size_t winv = finite_.inverse(x.finite);
  return {-finite_.apply(winv, x.translation), static_cast<std::uint32_t>(winv)};
}

AffineWeylElement AffineWeylGroup::right_simple(const AffineWeylElement& x, std::size_t i) const {
  const auto& s = simple_[i];
  if (is_zero(s.translation)) {
    return {x.translation, static_cast<std::uint32_t>(finite_.multiply(x.finite, s.finite))};
  }
  return multiply(x, s);
}

AffineWeylElement AffineWeylGroup::left_simple(const AffineWeylElement& x, std::size_t i) const {
  return multiply(simple_[i], x);
}

std::size_t AffineWeylGroup::length(const AffineWeylElement& x) const {
  const auto& rd = datum();
  std::int64_t total = 0;
  for (std::size_t j = 0; j < rd.positive_roots().size(); ++j) {
    const std::int64_t m = dot(rd.root_pairing_row(j), x.translation);
    total += finite_.inverse_keeps_positive(x.finite, j) ? std::llabs(m) : std::llabs(m - 1);
  }
  return static_cast<std::size_t>(total);
}

ReducedDecomposition AffineWeylGroup::reduced_word(const AffineWeylElement& x, DescentTieBreak tie) const {
  ReducedDecomposition out{{}, x};
  std::size_t len = length(x);
  const std::size_t n = simple_.size();
  while (len > 0) {
    bool found = false;
    for (std::size_t k = 0; k < n && !found; ++k) {
      const std::size_t i = tie == DescentTieBreak::Smallest ? k : n - 1 - k;
      AffineWeylElement y = left_simple(out.omega, i);
      const std::size_t ly = length(y);
      if (ly < len) {
        out.word.push_back(i);
        out.omega = std::move(y);
        len = ly;
        found = true;
      }
    }
    if (!found) throw InternalError("no descent for element of positive length " + format(out.omega));
  }
  return out;
}

AffineWeylElement AffineWeylGroup::evaluate(const std::vector<std::size_t>& word) const {
  AffineWeylElement x = identity();
  for (auto i : word) x = right_simple(x, i);
  return x;
}

bool AffineWeylGroup::same_omega_component(const AffineWeylElement& x, const AffineWeylElement& y) const {
  return datum().pi1_label(x.translation) == datum().pi1_label(y.translation);
}

bool AffineWeylGroup::bruhat_leq(const AffineWeylElement& v, const AffineWeylElement& w,
                                 DescentTieBreak tie) const {
  const std::size_t lw = length(w);
  if (lw > options_.bruhat_bound) {
    throw std::length_error("bruhat_leq: length " + std::to_string(lw) + " exceeds the bound " +
                            std::to_string(options_.bruhat_bound));
  }
  if (!same_omega_component(v, w)) return false;
  if (length(v) > lw) return false;
  const ReducedDecomposition rw = reduced_word(w, tie);
  const AffineWeylElement target = multiply(v, inverse(rw.omega));
  // Products of all subwords of the reduced word, built prefix by prefix.
  std::set<AffineWeylElement> reach{identity()};
  for (auto i : rw.word) {
    std::vector<AffineWeylElement> extended;
    extended.reserve(reach.size());
    for (const auto& x : reach) extended.push_back(right_simple(x, i));
    reach.insert(extended.begin(), extended.end());
  }
  return reach.count(target) > 0;
}

DoubleCoset AffineWeylGroup::spherical_double_coset(const DominantCocharacter& mu) const {
  if (mu.datum() != datum().fingerprint()) throw std::invalid_argument("cocharacter of another root datum");
  // u t_mu v = t_{u mu} u v, so the coset is W0.mu x W0.
  DoubleCoset out;
  for (const auto& lam : finite_.orbit(mu.value()))
    for (std::size_t w = 0; w < finite_.size(); ++w) out.elements.push_back({lam, static_cast<std::uint32_t>(w)});
  std::sort(out.elements.begin(), out.elements.end());
  std::size_t best_min = 0, best_max = 0, lmin = SIZE_MAX, lmax = 0;
  std::size_t count_min = 0, count_max = 0;
  for (std::size_t k = 0; k < out.elements.size(); ++k) {
    const std::size_t l = length(out.elements[k]);
    if (l < lmin) {
      lmin = l;
      best_min = k;
      count_min = 1;
    } else if (l == lmin) {
      ++count_min;
    }
    if (l > lmax || k == 0) {
      lmax = l;
      best_max = k;
      count_max = 1;
    } else if (l == lmax) {
      ++count_max;
    }
  }
  if (count_min != 1 || count_max != 1) throw InternalError("double coset extremal element not unique");
  out.minimal = out.elements[best_min];
  out.maximal = out.elements[best_max];
  return out;
}

std::vector<AffineWeylElement> AffineWeylGroup::omega_elements(std::int64_t translation_bound) const {
  std::vector<AffineWeylElement> out;
  const std::size_t r = datum().rank();
  LatticeVec x(r, -translation_bound);
  for (;;) {
    for (std::size_t w = 0; w < finite_.size(); ++w) {
      AffineWeylElement e{x, static_cast<std::uint32_t>(w)};
      if (length(e) == 0) out.push_back(e);
    }
    std::size_t i = 0;
    while (i < r && x[i] == translation_bound) x[i++] = -translation_bound;
    if (i == r) break;
    ++x[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> AffineWeylGroup::omega_action(const AffineWeylElement& omega) const {
  if (length(omega) != 0) throw std::invalid_argument("omega_action needs a length-zero element");
  const AffineWeylElement inv = inverse(omega);
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < simple_.size(); ++i) {
    const AffineWeylElement c = multiply(multiply(omega, simple_[i]), inv);
    auto it = std::find(simple_.begin(), simple_.end(), c);
    if (it == simple_.end()) throw InternalError("length-zero element does not permute the simple reflections");
    perm.push_back(static_cast<std::size_t>(it - simple_.begin()));
  }
  return perm;
}

IntMatrix AffineWeylGroup::affine_matrix(const AffineWeylElement& x) const {
  const std::size_t r = datum().rank();
  IntMatrix m(r + 1, r + 1);
  const IntMatrix& a = finite_.element(x.finite).action;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) m(i, j) = a(i, j);
    m(i, r) = x.translation[i];
  }
  m(r, r) = 1;
  return m;
}

std::string AffineWeylGroup::format(const AffineWeylElement& x) const {
  std::string out = "t[";
  for (std::size_t i = 0; i < x.translation.size(); ++i) {
    out += (i ? "," : "") + std::to_string(x.translation[i]);
  }
  out += "]·" + finite_.word_string(x.finite);
  return out;
}

std::string AffineWeylGroup::affine_word_string(const std::vector<std::size_t>& word) const {
  if (word.empty()) return "e";
  const std::size_t s = datum().semisimple_rank();
  const std::size_t comps = simple_.size() - s;
  std::string out;
  for (auto i : word) {
    if (i < s) {
      out += "s" + std::to_string(i + 1);
    } else if (comps == 1) {
      out += "s0";
    } else {
      out += "s0." + std::to_string(i - s + 1);
    }
  }
  return out;
}

nlohmann::ordered_json AffineWeylGroup::to_json(const AffineWeylElement& x) const {
  const ReducedDecomposition rw = reduced_word(x);
  nlohmann::ordered_json j;
  j["translation"] = vec_to_json(x.translation);
  j["word"] = affine_word_string(rw.word);
  j["omega"] = format(rw.omega);
  return j;
}

}  // namespace satake
