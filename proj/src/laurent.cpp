#include "satake/laurent.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

#include "satake/errors.hpp"

namespace satake {

LaurentPoly::Exponent add_exponents(LaurentPoly::Exponent a, LaurentPoly::Exponent b) {
  LaurentPoly::Exponent out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("Laurent exponent overflow");
  }
  return out;
}

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) terms_.emplace_back(0, BigInt(constant));
}

LaurentPoly::LaurentPoly(const BigInt& constant) {
  if (constant != 0) terms_.emplace_back(0, constant);
}

LaurentPoly LaurentPoly::monomial(const BigInt& coeff, Exponent exponent) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace_back(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& [e, c] : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == e) {
      p.terms_.back().second += c;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (c != 0) {
      p.terms_.emplace_back(e, std::move(c));
    }
  }
  return p;
}

BigInt LaurentPoly::coeff(Exponent e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, Exponent x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

std::optional<LaurentPoly::Exponent> LaurentPoly::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().first;
}

std::optional<LaurentPoly::Exponent> LaurentPoly::max_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().first;
}

BigInt LaurentPoly::eval_at_one() const {
  BigInt sum = 0;
  for (const auto& t : terms_) sum += t.second;
  return sum;
}

LaurentPoly LaurentPoly::invert_q() const {
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (it->first == std::numeric_limits<Exponent>::min()) {
      throw std::overflow_error("Laurent exponent overflow");
    }
    p.terms_.emplace_back(-it->first, it->second);
  }
  return p;
}

LaurentPoly LaurentPoly::shift(Exponent k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.first = add_exponents(t.first, k);
  return p;
}

LaurentPoly LaurentPoly::divide_exact(const BigInt& c) const {
  if (c == 0) throw NotDivisible("division by zero");
  LaurentPoly p = *this;
  for (auto& t : p.terms_) {
    if (t.second % c != 0) {
      throw NotDivisible("coefficient " + t.second.str() + " not divisible by " + c.str());
    }
    t.second /= c;
  }
  return p;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw NotDivisible("division by the zero polynomial");
  // Long division from the top degree down. The quotient's exponent range is
  // bounded, so a remainder that survives past it means non-divisibility.
  LaurentPoly remainder = *this;
  std::vector<Term> quotient;
  const Exponent lead_exp = divisor.terms_.back().first;
  const BigInt& lead = divisor.terms_.back().second;
  const Exponent low_exp = divisor.terms_.front().first;
  while (!remainder.is_zero()) {
    const auto& top = remainder.terms_.back();
    const Exponent e = add_exponents(top.first, -lead_exp);
    // Quotient terms below this exponent cannot cancel the remainder's
    // lowest term, so stop as soon as that is impossible.
    if (add_exponents(e, low_exp) < remainder.terms_.front().first) break;
    if (top.second % lead != 0) break;
    BigInt c = top.second / lead;
    quotient.emplace_back(e, c);
    remainder.add_scaled(divisor, -c, e);
  }
  if (!remainder.is_zero()) {
    throw NotDivisible("(" + str() + ") is not divisible by (" + divisor.str() + ")");
  }
  return from_terms(std::move(quotient));
}

bool LaurentPoly::is_polynomial() const {
  return terms_.empty() || terms_.front().first >= 0;
}

bool LaurentPoly::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second > 0; });
}

void LaurentPoly::add_scaled(const LaurentPoly& other, const BigInt& c, Exponent k) {
  if (c == 0 || other.is_zero()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end()) {
      merged.push_back(std::move(*a++));
      continue;
    }
    const Exponent eb = add_exponents(b->first, k);
    if (a == terms_.end() || eb < a->first) {
      merged.emplace_back(eb, b->second * c);
      ++b;
    } else if (a->first < eb) {
      merged.push_back(std::move(*a++));
    } else {
      BigInt sum = a->second + b->second * c;
      if (sum != 0) merged.emplace_back(eb, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

void LaurentPoly::add_product(const LaurentPoly& factor, const LaurentPoly& other) {
  if (factor.size() == 1) {
    add_scaled(other, factor.terms_.front().second, factor.terms_.front().first);
    return;
  }
  *this += factor * other;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  add_scaled(other, 1, 0);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  add_scaled(other, -1, 0);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<LaurentPoly::Term> raw;
  raw.reserve(a.size() * b.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) raw.emplace_back(add_exponents(ea, eb), ca * cb);
  }
  return LaurentPoly::from_terms(std::move(raw));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = c;
    if (first) {
      if (c < 0) {
        os << "-";
        mag = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) mag = -c;
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

nlohmann::ordered_json LaurentPoly::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [e, c] : terms_) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
      j[std::to_string(e)] = static_cast<std::int64_t>(c);
    } else {
      j[std::to_string(e)] = c.str();
    }
  }
  return j;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::ordered_json& j) {
  std::vector<Term> terms;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Exponent e = std::stoll(it.key());
    if (it.value().is_string()) {
      terms.emplace_back(e, BigInt(it.value().get<std::string>()));
    } else {
      terms.emplace_back(e, BigInt(it.value().get<std::int64_t>()));
    }
  }
  return from_terms(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

}  // namespace satake
