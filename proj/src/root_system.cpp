#include "discdeg/root_system.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace discdeg {

// ---------------------------------------------------------------------------
// Weight

Weight Weight::unit(std::size_t dim, std::size_t index) {
  Weight w = zero(dim);
  w.coords_.at(index) = Rational(1);
  return w;
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c.is_zero(); });
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.size() != size()) throw std::invalid_argument("Weight: dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (other.size() != size()) throw std::invalid_argument("Weight: dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Weight operator*(const Rational& c, Weight w) {
  for (auto& x : w.coords_) x *= c;
  return w;
}

Weight Weight::operator-() const { return Rational(-1) * *this; }

std::string Weight::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? ", " : "") << coords_[i];
  os << ")";
  return os.str();
}

Rational dot(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational acc(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  return acc;
}

Rational evaluate(const Weight& w, std::span<const Rational> t) {
  if (w.size() != t.size()) throw std::invalid_argument("evaluate: dimension mismatch");
  Rational acc(0);
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!w[i].is_zero()) acc += w[i] * t[i];
  return acc;
}

// ---------------------------------------------------------------------------
// Factor

namespace {

std::uint64_t mul_saturating(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f = mul_saturating(f, static_cast<std::uint64_t>(i));
  return f;
}

std::uint64_t pow2_u64(int n) {
  std::uint64_t p = 1;
  for (int i = 0; i < n; ++i) p = mul_saturating(p, 2);
  return p;
}

}  // namespace

std::string Factor::label() const {
  switch (kind) {
    case FactorKind::A: return "A" + std::to_string(rank);
    case FactorKind::B: return "B" + std::to_string(rank);
    case FactorKind::C: return "C" + std::to_string(rank);
    case FactorKind::D: return "D" + std::to_string(rank);
    case FactorKind::G2: return "G2";
    case FactorKind::GL: return "GL" + std::to_string(rank);
  }
  return "?";
}

std::uint64_t Factor::weyl_order() const {
  switch (kind) {
    case FactorKind::A: return factorial_u64(rank + 1);
    case FactorKind::B:
    case FactorKind::C: return mul_saturating(pow2_u64(rank), factorial_u64(rank));
    case FactorKind::D: return mul_saturating(pow2_u64(rank - 1), factorial_u64(rank));
    case FactorKind::G2: return 12;
    case FactorKind::GL: return factorial_u64(rank);
  }
  return 1;
}

std::size_t Factor::negative_root_count() const {
  const auto r = static_cast<std::size_t>(rank);
  switch (kind) {
    case FactorKind::A: return r * (r + 1) / 2;
    case FactorKind::B:
    case FactorKind::C: return r * r;
    case FactorKind::D: return r * (r - 1);
    case FactorKind::G2: return 6;
    case FactorKind::GL: return r * (r - 1) / 2;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// RootSystem

RootSystem RootSystem::build(std::span<const FactorSpec> specs) {
  if (specs.empty()) throw std::invalid_argument("root system needs at least one factor");
  RootSystem rs;
  std::size_t offset = 0;
  for (const auto& spec : specs) {
    Factor f{spec.kind, spec.rank, offset, 0, 0, 0};
    switch (spec.kind) {
      case FactorKind::A:
        if (spec.rank < 1) throw std::invalid_argument("A_n needs n >= 1");
        f.dim = static_cast<std::size_t>(spec.rank) + 1;
        f.num_simple = static_cast<std::size_t>(spec.rank);
        break;
      case FactorKind::B:
      case FactorKind::C:
        if (spec.rank < 1) throw std::invalid_argument(f.label() + ": rank must be >= 1");
        f.dim = f.num_simple = static_cast<std::size_t>(spec.rank);
        break;
      case FactorKind::D:
        if (spec.rank < 3)
          throw std::invalid_argument("D_n needs n >= 3 (use A1+A1 for D2)");
        f.dim = f.num_simple = static_cast<std::size_t>(spec.rank);
        break;
      case FactorKind::G2:
        if (spec.rank != 2) throw std::invalid_argument("G2 has rank 2");
        f.dim = 3;
        f.num_simple = 2;
        break;
      case FactorKind::GL:
        if (spec.rank < 1) throw std::invalid_argument("GL(n) needs n >= 1");
        f.dim = static_cast<std::size_t>(spec.rank);
        f.num_simple = static_cast<std::size_t>(spec.rank) - 1;
        break;
    }
    offset += f.dim;
    rs.factors_.push_back(f);
  }
  rs.ambient_dim_ = offset;
  const std::size_t d = rs.ambient_dim_;

  auto e = [d](std::size_t i) { return Weight::unit(d, i); };
  for (auto& f : rs.factors_) {
    f.first_simple = rs.simple_roots_.size();
    const std::size_t o = f.offset;
    switch (f.kind) {
      case FactorKind::A:
      case FactorKind::GL:
        for (std::size_t i = 0; i < f.num_simple; ++i)
          rs.simple_roots_.push_back(e(o + i + 1) - e(o + i));
        break;
      case FactorKind::B:
      case FactorKind::C:
      case FactorKind::D:
        if (f.kind == FactorKind::B) rs.simple_roots_.push_back(e(o));
        if (f.kind == FactorKind::C) rs.simple_roots_.push_back(Rational(2) * e(o));
        if (f.kind == FactorKind::D) rs.simple_roots_.push_back(e(o) + e(o + 1));
        for (std::size_t i = 1; i < f.num_simple; ++i)
          rs.simple_roots_.push_back(e(o + i) - e(o + i - 1));
        break;
      case FactorKind::G2:
        rs.simple_roots_.push_back(e(o + 1) - e(o));
        rs.simple_roots_.push_back(e(o) - Rational(2) * e(o + 1) + e(o + 2));
        break;
    }
  }

  // simple reflections as matrices: s(v) = v - 2 (v,a)/(a,a) a
  for (const auto& alpha : rs.simple_roots_) {
    RationalMatrix m = RationalMatrix::identity(d);
    const Rational scale = Rational(2) / dot(alpha, alpha);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (!alpha[i].is_zero() && !alpha[j].is_zero()) m(i, j) -= scale * alpha[i] * alpha[j];
    rs.reflections_.push_back(std::move(m));
  }

  // fundamental weights, factor by factor
  rs.fundamental_weights_.resize(rs.simple_roots_.size(), Weight::zero(d));
  for (const auto& f : rs.factors_) {
    const std::size_t r = f.num_simple;
    if (r == 0) continue;
    if (f.kind == FactorKind::GL) {
      for (std::size_t i = 0; i < r; ++i) {
        Weight w = Weight::zero(d);
        for (std::size_t j = i + 1; j < f.dim; ++j) w[f.offset + j] = Rational(1);
        rs.fundamental_weights_[f.first_simple + i] = w;
      }
      continue;
    }
    RationalMatrix gram(r, r);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        gram(j, k) = dot(rs.simple_roots_[f.first_simple + j], rs.simple_roots_[f.first_simple + k]);
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<Rational> rhs(r);
      const auto& ai = rs.simple_roots_[f.first_simple + i];
      rhs[i] = dot(ai, ai) / Rational(2);
      const auto m = solve_linear(gram, rhs);
      Weight w = Weight::zero(d);
      for (std::size_t j = 0; j < r; ++j) w += m[j] * rs.simple_roots_[f.first_simple + j];
      rs.fundamental_weights_[f.first_simple + i] = w;
    }
  }

  // all roots: closure of the simple roots under simple reflections
  std::set<Weight> roots(rs.simple_roots_.begin(), rs.simple_roots_.end());
  std::vector<Weight> frontier(rs.simple_roots_.begin(), rs.simple_roots_.end());
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& beta : frontier)
      for (const auto& alpha : rs.simple_roots_) {
        Weight img = rs.reflect(beta, alpha);
        if (roots.insert(img).second) next.push_back(std::move(img));
      }
    frontier = std::move(next);
  }
  Weight rho = Weight::zero(d);
  for (const auto& w : rs.fundamental_weights_) rho += w;
  for (const auto& beta : roots) {
    const int s = dot(beta, rho).sign();
    if (s > 0) rs.positive_roots_.push_back(beta);
    else if (s < 0) rs.negative_roots_.push_back(beta);
    else throw std::logic_error("root orthogonal to rho");
  }

  std::size_t expected = 0;
  for (const auto& f : rs.factors_) expected += f.negative_root_count();
  if (rs.negative_roots_.size() != expected)
    throw std::logic_error("root system construction: wrong negative root count");
  return rs;
}

bool RootSystem::is_semisimple() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.semisimple(); });
}

std::string RootSystem::label() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += factors_[i].kind == FactorKind::GL && factors_[i - 1].kind == FactorKind::GL ? "x" : "+";
    out += factors_[i].label();
  }
  return out;
}

std::uint64_t RootSystem::weyl_order() const {
  std::uint64_t order = 1;
  for (const auto& f : factors_) order = mul_saturating(order, f.weyl_order());
  return order;
}

PairingSign RootSystem::pairing_sign(const Weight& beta, const Weight& lambda) const {
  const int s = dot(beta, lambda).sign();
  if (s < 0) return PairingSign::negative;
  if (s > 0) return PairingSign::positive;
  return PairingSign::zero;
}

Weight RootSystem::reflect(const Weight& v, const Weight& alpha) const {
  const Rational norm = dot(alpha, alpha);
  if (norm.is_zero()) throw std::invalid_argument("reflect: zero root");
  return v - (Rational(2) * dot(v, alpha) / norm) * alpha;
}

std::vector<Rational> RootSystem::fundamental_coordinates(const Weight& lambda) const {
  std::vector<Rational> y;
  y.reserve(simple_roots_.size());
  for (const auto& a : simple_roots_) y.push_back(Rational(2) * dot(lambda, a) / dot(a, a));
  return y;
}

Weight RootSystem::from_fundamental(std::span<const Rational> y) const {
  if (y.size() != fundamental_weights_.size())
    throw std::invalid_argument("expected " + std::to_string(fundamental_weights_.size()) +
                                " fundamental-weight coordinates, got " + std::to_string(y.size()));
  Weight w = Weight::zero(ambient_dim_);
  for (std::size_t i = 0; i < y.size(); ++i) w += y[i] * fundamental_weights_[i];
  return w;
}

bool RootSystem::is_dominant(const Weight& lambda) const {
  return std::all_of(simple_roots_.begin(), simple_roots_.end(),
                     [&](const Weight& a) { return dot(lambda, a).sign() >= 0; });
}

std::pair<Weight, bool> RootSystem::dominant_representative(const Weight& lambda) const {
  if (lambda.size() != ambient_dim_) throw std::invalid_argument("weight has wrong dimension");
  Weight w = lambda;
  bool moved = false;
  while (true) {
    auto it = std::find_if(simple_roots_.begin(), simple_roots_.end(),
                           [&](const Weight& a) { return dot(w, a).sign() < 0; });
    if (it == simple_roots_.end()) return {w, moved};
    w = reflect(w, *it);
    moved = true;
  }
}

bool RootSystem::is_integral(const Weight& lambda) const {
  for (const auto& y : fundamental_coordinates(lambda))
    if (!y.is_integer()) return false;
  for (const auto& f : factors_) {
    if (f.kind != FactorKind::GL) continue;
    for (std::size_t i = 0; i < f.dim; ++i)
      if (!lambda[f.offset + i].is_integer()) return false;
  }
  return true;
}

Weight RootSystem::project_to_root_span(const Weight& lambda) const {
  Weight w = lambda;
  for (const auto& f : factors_) {
    if (f.kind != FactorKind::A && f.kind != FactorKind::G2) continue;
    Rational mean(0);
    for (std::size_t i = 0; i < f.dim; ++i) mean += w[f.offset + i];
    mean /= Rational(static_cast<long long>(f.dim));
    for (std::size_t i = 0; i < f.dim; ++i) w[f.offset + i] -= mean;
  }
  return w;
}

RootSystem RootSystem::with_central_factor() const {
  std::vector<FactorSpec> specs;
  for (const auto& f : factors_) specs.push_back({f.kind, f.rank});
  specs.push_back({FactorKind::GL, 1});
  return build(specs);
}

}  // namespace discdeg
