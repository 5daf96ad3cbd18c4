#include "satake/root_datum.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <regex>
#include <set>
#include <stdexcept>

namespace satake {

namespace {

constexpr std::size_t kMaxRoots = 20000;

std::uint64_t mix(std::uint64_t h, std::int64_t x) {
  h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

IntMatrix cartan_a(std::size_t n) {
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = 2;
    if (i + 1 < n) {
      a(i, i + 1) = -1;
      a(i + 1, i) = -1;
    }
  }
  return a;
}

LatticeVec unit(std::size_t rank, std::size_t i, std::int64_t v = 1) {
  LatticeVec e(rank, 0);
  e[i] = v;
  return e;
}

std::string dual_name(const std::string& name) {
  const auto x = name.find('x');
  if (x != std::string::npos && name.find('(') < x) {
    return dual_name(name.substr(0, x)) + "x" + dual_name(name.substr(x + 1));
  }
  static const std::regex re(R"(^([A-Za-z]+)\((\d+)\)$)");
  std::smatch m;
  if (std::regex_match(name, m, re)) {
    const std::string family = m[1];
    const int n = std::stoi(m[2]);
    if (family == "GL" || family == "torus") return name;
    if (family == "SL") return "PGL(" + std::to_string(n) + ")";
    if (family == "PGL") return "SL(" + std::to_string(n) + ")";
    if (family == "Sp") return "SO(" + std::to_string(n + 1) + ")";
    if (family == "SO" && n % 2 == 1) return "Sp(" + std::to_string(n - 1) + ")";
  }
  if (name.rfind("dual(", 0) == 0 && name.back() == ')') return name.substr(5, name.size() - 6);
  return "dual(" + name + ")";
}

}  // namespace

RootDatum::RootDatum(std::string name, IntMatrix pairing, std::vector<LatticeVec> simple_roots,
                     std::vector<LatticeVec> simple_coroots)
    : name_(std::move(name)),
      rank_(pairing.rows()),
      pairing_(std::move(pairing)),
      simple_roots_(std::move(simple_roots)),
      simple_coroots_(std::move(simple_coroots)) {
  if (pairing_.rows() != pairing_.cols()) throw std::invalid_argument("pairing matrix must be square");
  if (rank_ == 0) throw std::invalid_argument("rank must be positive");
  if (simple_roots_.size() != simple_coroots_.size()) {
    throw std::invalid_argument("simple roots and coroots must be in bijection");
  }
  for (const auto& v : simple_roots_)
    if (v.size() != rank_) throw std::invalid_argument("simple root of wrong rank");
  for (const auto& v : simple_coroots_)
    if (v.size() != rank_) throw std::invalid_argument("simple coroot of wrong rank");

  {
    const auto sf = smith_form(pairing_);
    if (sf.invariants.size() != rank_ ||
        std::any_of(sf.invariants.begin(), sf.invariants.end(), [](auto d) { return d != 1; })) {
      throw std::invalid_argument("pairing matrix must be unimodular (perfect pairing)");
    }
  }
  const IntMatrix pt = pairing_.transpose();
  for (const auto& a : simple_roots_) simple_root_rows_.push_back(pt.apply(a));

  const std::size_t s = simple_roots_.size();
  const IntMatrix a = cartan_matrix();
  for (std::size_t i = 0; i < s; ++i) {
    if (a(i, i) != 2) throw std::invalid_argument("<alpha_i, alpha_i^vee> must be 2");
    for (std::size_t j = 0; j < s; ++j) {
      if (i == j) continue;
      if (a(i, j) > 0) throw std::invalid_argument("off-diagonal Cartan entries must be <= 0");
      if ((a(i, j) == 0) != (a(j, i) == 0)) throw std::invalid_argument("Cartan matrix not symmetrizable");
    }
  }

  // Saturate the simple (root, coroot) pairs under simple reflections.
  struct RootPair {
    LatticeVec root, coroot, root_coords, coroot_coords;
  };
  std::map<LatticeVec, RootPair> roots;
  std::vector<LatticeVec> queue;
  for (std::size_t i = 0; i < s; ++i) {
    RootPair p{simple_roots_[i], simple_coroots_[i], unit(s, i), unit(s, i)};
    if (roots.emplace(p.root, p).second) queue.push_back(p.root);
  }
  while (!queue.empty()) {
    const RootPair cur = roots.at(queue.back());
    queue.pop_back();
    for (std::size_t i = 0; i < s; ++i) {
      const std::int64_t ci = pair(cur.root, simple_coroots_[i]);
      const std::int64_t ki = dot(simple_root_rows_[i], cur.coroot);
      RootPair next{cur.root - scaled(simple_roots_[i], ci), cur.coroot - scaled(simple_coroots_[i], ki),
                    cur.root_coords - scaled(unit(s, i), ci), cur.coroot_coords - scaled(unit(s, i), ki)};
      if (roots.emplace(next.root, next).second) {
        if (roots.size() > kMaxRoots) throw std::invalid_argument("root system is not of finite type");
        queue.push_back(next.root);
      }
    }
  }
  std::vector<RootPair> positive;
  for (auto& [key, p] : roots) {
    const bool pos = std::all_of(p.root_coords.begin(), p.root_coords.end(), [](auto c) { return c >= 0; });
    const bool neg = std::all_of(p.root_coords.begin(), p.root_coords.end(), [](auto c) { return c <= 0; });
    if (!pos && !neg) throw std::invalid_argument("root with mixed-sign coordinates");
    const bool cpos =
        std::all_of(p.coroot_coords.begin(), p.coroot_coords.end(), [](auto c) { return c >= 0; });
    if (pos != cpos) throw std::invalid_argument("root/coroot positivity mismatch");
    if (pos) positive.push_back(p);
  }
  auto height = [](const LatticeVec& c) { return std::accumulate(c.begin(), c.end(), std::int64_t{0}); };
  std::sort(positive.begin(), positive.end(), [&](const RootPair& x, const RootPair& y) {
    const auto hx = height(x.root_coords), hy = height(y.root_coords);
    if (hx != hy) return hx < hy;
    return x.root_coords > y.root_coords;
  });
  two_rho_ = zero_vec(rank_);
  two_rho_check_ = zero_vec(rank_);
  for (auto& p : positive) {
    two_rho_ = two_rho_ + p.root;
    two_rho_check_ = two_rho_check_ + p.coroot;
    positive_roots_.push_back(p.root);
    positive_coroots_.push_back(p.coroot);
    positive_root_coords_.push_back(p.root_coords);
    positive_coroot_coords_.push_back(p.coroot_coords);
    root_rows_.push_back(pt.apply(p.root));
  }

  // components of the Dynkin diagram
  std::vector<std::size_t> parent(s);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      if (i != j && a(i, j) != 0) parent[find(i)] = find(j);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < s; ++i) groups[find(i)].push_back(i);
  for (auto& [root, members] : groups) components_.push_back(members);
  std::sort(components_.begin(), components_.end());
  for (const auto& comp : components_) {
    std::size_t best = positive_roots_.size();
    for (std::size_t j = 0; j < positive_roots_.size(); ++j) {
      const auto& c = positive_root_coords_[j];
      bool inside = true;
      for (std::size_t i = 0; i < s; ++i)
        if (c[i] != 0 && std::find(comp.begin(), comp.end(), i) == comp.end()) inside = false;
      if (inside && (best == positive_roots_.size() || height(c) > height(positive_root_coords_[best]))) {
        best = j;
      }
    }
    highest_roots_.push_back(best);
  }

  coroot_matrix_ = IntMatrix::from_columns(rank_, simple_coroots_);
  if (rank_of(coroot_matrix_) != s) throw std::invalid_argument("simple coroots are linearly dependent");
  if (rank_of(IntMatrix::from_columns(rank_, simple_roots_)) != s) {
    throw std::invalid_argument("simple roots are linearly dependent");
  }
  coroot_inverse_ = left_inverse(coroot_matrix_);
  pi1_smith_ = smith_form(coroot_matrix_);
  for (auto d : pi1_smith_.invariants)
    if (d > 1) pi1_torsion_.push_back(d);
  pi1_free_rank_ = rank_ - pi1_smith_.invariants.size();

  IntMatrix orth(s, rank_);
  for (std::size_t i = 0; i < s; ++i) {
    const LatticeVec col = pairing_.apply(simple_coroots_[i]);
    for (std::size_t c = 0; c < rank_; ++c) orth(i, c) = col[c];
  }
  central_characters_ = integer_kernel(orth);

  std::uint64_t h = mix(0, static_cast<std::int64_t>(rank_));
  for (std::size_t r = 0; r < rank_; ++r)
    for (std::size_t c = 0; c < rank_; ++c) h = mix(h, pairing_(r, c));
  for (const auto& v : simple_roots_)
    for (auto x : v) h = mix(h, x);
  h = mix(h, -7);
  for (const auto& v : simple_coroots_)
    for (auto x : v) h = mix(h, x);
  fingerprint_ = h;
}

std::int64_t RootDatum::pair(const LatticeVec& chi, const LatticeVec& x) const {
  std::int64_t s = 0;
  for (std::size_t r = 0; r < rank_; ++r) {
    if (chi[r] == 0) continue;
    for (std::size_t c = 0; c < rank_; ++c) s += chi[r] * pairing_(r, c) * x[c];
  }
  return s;
}

IntMatrix RootDatum::cartan_matrix() const {
  const std::size_t s = simple_roots_.size();
  IntMatrix a(s, s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) a(i, j) = pair(simple_roots_[i], simple_coroots_[j]);
  return a;
}

std::optional<LatticeVec> RootDatum::coroot_coordinates(const LatticeVec& x) const {
  if (simple_coroots_.empty()) {
    if (is_zero(x)) return LatticeVec{};
    return std::nullopt;
  }
  return solve_integral(coroot_matrix_, coroot_inverse_, x);
}

LatticeVec RootDatum::pi1_label(const LatticeVec& x) const {
  const LatticeVec y = pi1_smith_.left.apply(x);
  LatticeVec label;
  const std::size_t k = pi1_smith_.invariants.size();
  for (std::size_t i = 0; i < rank_; ++i) {
    if (i < k) {
      const std::int64_t d = pi1_smith_.invariants[i];
      if (d == 1) continue;
      label.push_back(((y[i] % d) + d) % d);
    } else {
      label.push_back(y[i]);
    }
  }
  return label;
}

std::uint64_t RootDatum::pi1_order() const {
  if (pi1_free_rank_ > 0) return 0;
  std::uint64_t n = 1;
  for (auto d : pi1_torsion_) n *= static_cast<std::uint64_t>(d);
  return n;
}

bool RootDatum::is_dominant(const LatticeVec& x) const {
  if (x.size() != rank_) return false;
  return std::all_of(simple_root_rows_.begin(), simple_root_rows_.end(),
                     [&](const LatticeVec& row) { return dot(row, x) >= 0; });
}

bool operator==(const RootDatum& a, const RootDatum& b) {
  return a.pairing_ == b.pairing_ && a.simple_roots_ == b.simple_roots_ &&
         a.simple_coroots_ == b.simple_coroots_;
}

RootDatum catalog(std::string_view name, std::span<const int> params) {
  const std::string n_str(name);
  if (params.size() != 1) throw std::invalid_argument(n_str + " takes exactly one integer parameter");
  const int n = params[0];
  if (n <= 0) throw std::invalid_argument("nonpositive rank for " + n_str);
  const std::string label = n_str + "(" + std::to_string(n) + ")";

  if (name == "GL") {
    std::vector<LatticeVec> roots;
    for (int i = 0; i + 1 < n; ++i) {
      LatticeVec a(n, 0);
      a[i] = 1;
      a[i + 1] = -1;
      roots.push_back(a);
    }
    return RootDatum(label, IntMatrix::identity(n), roots, roots);
  }
  if (name == "SL" || name == "PGL") {
    if (n < 2) throw std::invalid_argument(label + " needs n >= 2");
    const std::size_t r = static_cast<std::size_t>(n - 1);
    const IntMatrix a = cartan_a(r);
    std::vector<LatticeVec> units, rows;
    for (std::size_t i = 0; i < r; ++i) {
      units.push_back(unit(r, i));
      rows.push_back(a.row(i));
    }
    // SL: X_* has the simple coroot basis, X^* the fundamental weights.
    // PGL: X^* has the simple root basis, X_* the fundamental coweights.
    if (name == "SL") return RootDatum(label, IntMatrix::identity(r), rows, units);
    return RootDatum(label, IntMatrix::identity(r), units, rows);
  }
  if (name == "Sp") {
    if (n % 2 != 0) throw std::invalid_argument("Sp(n) needs n even");
    const std::size_t m = static_cast<std::size_t>(n / 2);
    std::vector<LatticeVec> roots, coroots;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      LatticeVec a(m, 0);
      a[i] = 1;
      a[i + 1] = -1;
      roots.push_back(a);
      coroots.push_back(a);
    }
    roots.push_back(unit(m, m - 1, 2));
    coroots.push_back(unit(m, m - 1, 1));
    return RootDatum(label, IntMatrix::identity(m), roots, coroots);
  }
  if (name == "torus") return RootDatum(label, IntMatrix::identity(n), {}, {});
  throw std::invalid_argument("unknown group: " + n_str);
}

RootDatum parse_group(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  // products split on an 'x' that follows a closing parenthesis
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == 'x' || s[i] == '*') && s[i - 1] == ')') {
      return product(parse_group(s.substr(0, i)), parse_group(s.substr(i + 1)));
    }
  }
  static const std::regex re(R"(^([A-Za-z]+)\((-?\d+)\)$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw std::invalid_argument("unknown group: " + std::string(text));
  const int param = std::stoi(m[2]);
  const std::string family = m[1];
  return catalog(family, std::span<const int>(&param, 1));
}

RootDatum product(const RootDatum& a, const RootDatum& b) {
  const std::size_t ra = a.rank(), rb = b.rank();
  IntMatrix p(ra + rb, ra + rb);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ra; ++j) p(i, j) = a.pairing_matrix()(i, j);
  for (std::size_t i = 0; i < rb; ++i)
    for (std::size_t j = 0; j < rb; ++j) p(ra + i, ra + j) = b.pairing_matrix()(i, j);
  auto lift = [&](const std::vector<LatticeVec>& va, const std::vector<LatticeVec>& vb) {
    std::vector<LatticeVec> out;
    for (const auto& v : va) {
      LatticeVec w(ra + rb, 0);
      std::copy(v.begin(), v.end(), w.begin());
      out.push_back(w);
    }
    for (const auto& v : vb) {
      LatticeVec w(ra + rb, 0);
      std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(ra));
      out.push_back(w);
    }
    return out;
  };
  return RootDatum(a.name() + "x" + b.name(), p, lift(a.simple_roots(), b.simple_roots()),
                   lift(a.simple_coroots(), b.simple_coroots()));
}

RootDatum dual(const RootDatum& rd) {
  return RootDatum(dual_name(rd.name()), rd.pairing_matrix().transpose(), rd.simple_coroots(),
                   rd.simple_roots());
}

bool equivalent(const RootDatum& a, const RootDatum& b) {
  if (a.rank() != b.rank() || a.semisimple_rank() != b.semisimple_rank()) return false;
  if (a.cartan_matrix() != b.cartan_matrix()) return false;
  auto invariants = [](const RootDatum& rd, bool coroots) {
    // Smith invariants of the root (resp. coroot) lattice inside X^* (resp. X_*).
    const auto& gens = coroots ? rd.simple_coroots() : rd.simple_roots();
    if (gens.empty()) return std::vector<std::int64_t>{};
    return smith_form(IntMatrix::from_columns(rd.rank(), gens)).invariants;
  };
  return invariants(a, true) == invariants(b, true) && invariants(a, false) == invariants(b, false);
}

DominantCocharacter::DominantCocharacter(const RootDatum& rd, LatticeVec x)
    : value_(std::move(x)), datum_(rd.fingerprint()) {
  if (value_.size() != rd.rank()) throw std::invalid_argument("cocharacter of wrong rank");
  if (!rd.is_dominant(value_)) throw std::invalid_argument(format_vec(value_) + " is not dominant");
}

Pi1Class pi1_class(const RootDatum& rd, const LatticeVec& x) { return Pi1Class{rd.pi1_label(x)}; }

bool dominance_leq(const RootDatum& rd, const DominantCocharacter& lam, const DominantCocharacter& mu) {
  if (lam.datum() != rd.fingerprint() || mu.datum() != rd.fingerprint()) {
    throw std::invalid_argument("dominance_leq: cocharacters belong to a different root datum");
  }
  const auto c = rd.coroot_coordinates(mu.value() - lam.value());
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](std::int64_t x) { return x >= 0; });
}

std::int64_t d_pairing(const RootDatum& rd, const LatticeVec& mu) { return rd.pair(rd.two_rho(), mu); }

int parity(const RootDatum& rd, const LatticeVec& mu) {
  const std::int64_t d = d_pairing(rd, mu);
  return static_cast<int>(((d % 2) + 2) % 2);
}

int EpsilonCharacter::operator()(const LatticeVec& chi) const {
  return (dot(two_rho_, chi) % 2 == 0) ? 1 : -1;
}

bool EpsilonCharacter::is_trivial() const {
  return std::all_of(two_rho_.begin(), two_rho_.end(), [](std::int64_t x) { return x % 2 == 0; });
}

G1Data g1_data(const RootDatum& rd) {
  // eps(chi) = (-1)^{<2 rho, chi>} for chi in X^*(T^) = X_*(T).
  EpsilonCharacter eps(rd.pairing_matrix().transpose().apply(rd.two_rho()));
  const bool trivial = eps.is_trivial();
  RootDatum d = dual(rd);
  std::string structure;
  if (trivial) {
    structure = "Ĝ₁ = Ĝ × G_m (direct product)";
  } else {
    static const int two = 2;
    if (equivalent(d, catalog("SL", std::span<const int>(&two, 1)))) {
      structure = "Ĝ₁ = GL₂";
    } else {
      structure = "Ĝ₁ = (Ĝ × G_m)/μ₂, ε ≠ 1";
    }
  }
  return G1Data{std::move(d), eps, trivial, trivial, structure};
}

std::vector<DominantCocharacter> dominant_cocharacters(const RootDatum& rd, std::int64_t max_d,
                                                       std::int64_t central_radius) {
  std::vector<DominantCocharacter> out;
  if (max_d < 0) return out;
  const std::int64_t radius = max_d + central_radius;
  const std::size_t r = rd.rank();
  LatticeVec x(r, -radius);
  for (;;) {
    if (rd.is_dominant(x) && d_pairing(rd, x) <= max_d) {
      bool central_ok = true;
      for (const auto& z : rd.central_characters())
        if (std::llabs(rd.pair(z, x)) > central_radius) central_ok = false;
      if (central_ok) out.emplace_back(rd, x);
    }
    std::size_t i = 0;
    while (i < r && x[i] == radius) x[i++] = -radius;
    if (i == r) break;
    ++x[i];
  }
  std::sort(out.begin(), out.end(), [&](const DominantCocharacter& a, const DominantCocharacter& b) {
    const auto da = d_pairing(rd, a), db = d_pairing(rd, b);
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

nlohmann::ordered_json to_json(const RootDatum& rd) {
  nlohmann::ordered_json j;
  j["name"] = rd.name();
  j["rank"] = rd.rank();
  j["pairing_matrix"] = rd.pairing_matrix().to_json();
  auto roots = nlohmann::ordered_json::array();
  for (const auto& a : rd.simple_roots()) roots.push_back(vec_to_json(a));
  auto coroots = nlohmann::ordered_json::array();
  for (const auto& a : rd.simple_coroots()) coroots.push_back(vec_to_json(a));
  j["simple_roots"] = roots;
  j["simple_coroots"] = coroots;
  return j;
}

}  // namespace satake
