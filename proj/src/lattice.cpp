#include "satake/lattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace satake {

namespace {

using Big = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational lead = m[r][c];
    for (auto& x : m[r]) x /= lead;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

RationalMatrix to_rational(const IntMatrix& a) {
  RationalMatrix m(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  return m;
}

std::int64_t to_i64(const Big& b) {
  if (b > std::numeric_limits<std::int64_t>::max() || b < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("lattice coordinate overflow");
  }
  return static_cast<std::int64_t>(b);
}

}  // namespace

LatticeVec zero_vec(std::size_t rank) { return LatticeVec(rank, 0); }

LatticeVec operator+(const LatticeVec& a, const LatticeVec& b) {
  LatticeVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

LatticeVec operator-(const LatticeVec& a, const LatticeVec& b) {
  LatticeVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

LatticeVec operator-(const LatticeVec& a) {
  LatticeVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

LatticeVec scaled(const LatticeVec& a, std::int64_t s) {
  LatticeVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

std::int64_t dot(const LatticeVec& a, const LatticeVec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const LatticeVec& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; });
}

std::string format_vec(const LatticeVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

LatticeVec parse_vec(const std::string& text) {
  LatticeVec v;
  std::string cleaned;
  for (char ch : text) {
    if (ch == '(' || ch == ')' || ch == '[' || ch == ']' || ch == ' ') continue;
    cleaned += ch;
  }
  if (cleaned.empty()) return v;
  std::stringstream ss(cleaned);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const long long x = std::stoll(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad lattice vector: " + text);
    v.push_back(x);
  }
  return v;
}

nlohmann::ordered_json vec_to_json(const LatticeVec& v) {
  auto j = nlohmann::ordered_json::array();
  for (auto x : v) j.push_back(x);
  return j;
}

std::size_t LatticeVecHash::operator()(const LatticeVec& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<LatticeVec>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

LatticeVec IntMatrix::apply(const LatticeVec& v) const {
  LatticeVec out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::int64_t s = 0;
    for (std::size_t c = 0; c < cols_; ++c) s += data_[r * cols_ + c] * v[c];
    out[r] = s;
  }
  return out;
}

LatticeVec IntMatrix::column(std::size_t c) const {
  LatticeVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

LatticeVec IntMatrix::row(std::size_t r) const {
  LatticeVec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

nlohmann::ordered_json IntMatrix::to_json() const {
  auto j = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < rows_; ++r) j.push_back(vec_to_json(row(r)));
  return j;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "," : "") << "[";
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::size_t rank_of(const IntMatrix& m) {
  auto r = to_rational(m);
  return row_reduce(r, m.cols()).size();
}

ScaledLeftInverse left_inverse(const IntMatrix& a) {
  const std::size_t n = a.rows();
  const std::size_t k = a.cols();
  // Solve (A^T A) X = A^T over Q; X is a left inverse when A is injective.
  IntMatrix at = a.transpose();
  IntMatrix gram = at * a;
  RationalMatrix aug(k, std::vector<Rational>(k + n));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = gram(i, j);
    for (std::size_t j = 0; j < n; ++j) aug[i][k + j] = at(i, j);
  }
  auto pivots = row_reduce(aug, k);
  if (pivots.size() != k) throw std::invalid_argument("left_inverse: columns are linearly dependent");
  Big denom = 1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Big d = boost::multiprecision::denominator(aug[i][k + j]);
      denom = boost::multiprecision::lcm(denom, d);
    }
  ScaledLeftInverse inv{IntMatrix(k, n), to_i64(denom)};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational x = aug[i][k + j] * Rational(denom);
      inv.numerator(i, j) = to_i64(boost::multiprecision::numerator(x));
    }
  return inv;
}

std::optional<LatticeVec> solve_integral(const IntMatrix& a, const ScaledLeftInverse& inv, const LatticeVec& v) {
  LatticeVec c = inv.numerator.apply(v);
  for (auto& x : c) {
    if (x % inv.denominator != 0) return std::nullopt;
    x /= inv.denominator;
  }
  if (a.apply(c) != v) return std::nullopt;
  return c;
}

SmithForm smith_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix u = IntMatrix::identity(m);
  auto swap_rows = [&](IntMatrix& x, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < x.cols(); ++c) std::swap(x(i, c), x(j, c));
  };
  auto add_row = [&](IntMatrix& x, std::size_t dst, std::size_t src, std::int64_t f) {
    for (std::size_t c = 0; c < x.cols(); ++c) x(dst, c) += f * x(src, c);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < m; ++r) std::swap(a(r, i), a(r, j));
  };
  auto add_col = [&](std::size_t dst, std::size_t src, std::int64_t f) {
    for (std::size_t r = 0; r < m; ++r) a(r, dst) += f * a(r, src);
  };

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // pick the smallest nonzero entry in the remaining block as pivot
    for (;;) {
      std::size_t pr = m, pc = n;
      std::int64_t best = 0;
      for (std::size_t r = t; r < m; ++r)
        for (std::size_t c = t; c < n; ++c)
          if (a(r, c) != 0 && (best == 0 || std::llabs(a(r, c)) < best)) {
            best = std::llabs(a(r, c));
            pr = r;
            pc = c;
          }
      if (best == 0) goto done;
      if (pr != t) {
        swap_rows(a, pr, t);
        swap_rows(u, pr, t);
      }
      if (pc != t) swap_cols(pc, t);
      bool clean = true;
      for (std::size_t r = t + 1; r < m; ++r) {
        const std::int64_t f = a(r, t) / a(t, t);
        if (f != 0) {
          add_row(a, r, t, -f);
          add_row(u, r, t, -f);
        }
        if (a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        const std::int64_t f = a(t, c) / a(t, t);
        if (f != 0) add_col(c, t, -f);
        if (a(t, c) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility condition d_t | every remaining entry
      bool divides = true;
      for (std::size_t r = t + 1; r < m && divides; ++r)
        for (std::size_t c = t + 1; c < n; ++c)
          if (a(r, c) % a(t, t) != 0) {
            add_row(a, t, r, 1);
            add_row(u, t, r, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      for (std::size_t c = 0; c < n; ++c) a(t, c) = -a(t, c);
      for (std::size_t c = 0; c < m; ++c) u(t, c) = -u(t, c);
    }
  }
done:
  SmithForm sf{u, {}};
  for (std::size_t i = 0; i < std::min(m, n); ++i)
    if (a(i, i) != 0) sf.invariants.push_back(a(i, i));
  return sf;
}

std::vector<LatticeVec> integer_kernel(const IntMatrix& m) {
  auto r = to_rational(m);
  const auto pivots = row_reduce(r, m.cols());
  std::vector<LatticeVec> basis;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(m.cols(), 0);
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -r[i][free];
    Big denom = 1;
    for (const auto& xi : x) denom = boost::multiprecision::lcm(denom, boost::multiprecision::denominator(xi));
    Big g = 0;
    std::vector<Big> ints;
    for (const auto& xi : x) {
      ints.push_back(boost::multiprecision::numerator(xi * Rational(denom)));
      g = boost::multiprecision::gcd(g, ints.back());
    }
    LatticeVec v;
    for (auto& b : ints) v.push_back(to_i64(b / g));
    basis.push_back(v);
  }
  return basis;
}

}  // namespace satake
