#include "discdeg/closed_forms.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "discdeg/errors.hpp"
#include "discdeg/multi_poly.hpp"
#include "discdeg/root_system.hpp"
#include "discdeg/uni_poly.hpp"

namespace discdeg::closed {

namespace {

Rational sign_power(int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

Rational checked_integer(const Rational& v, const std::string& where) {
  if (!v.is_integer()) throw InconsistencyError(where + " produced a non-integer " + v.to_string());
  return v;
}

}  // namespace

AngleBracketTable::AngleBracketTable(int max_n) {
  require(max_n >= 0, "angle bracket table needs max_n >= 0");
  rows_.resize(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    auto& row = rows_[static_cast<std::size_t>(n)];
    row.resize(static_cast<std::size_t>(n) + 1);
    row[0] = n % 2 == 0 ? Rational(1) : Rational(-2);
    row[static_cast<std::size_t>(n)] = Rational(1);
    for (int k = 1; k < n; ++k)
      row[static_cast<std::size_t>(k)] = rows_[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(k)] +
                                         rows_[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(k) - 1];
    for (int k = 0; k <= n; ++k)
      if (row[static_cast<std::size_t>(k)] != angle_bracket_binomial(n, k))
        throw InconsistencyError("Pascal rule and binomial form of <" + std::to_string(n) + " " +
                                 std::to_string(k) + "> disagree");
  }
}

const Rational& AngleBracketTable::operator()(int n, int k) const {
  if (n < 0 || k < 0 || k > n || n > max_n())
    throw std::out_of_range("<" + std::to_string(n) + " " + std::to_string(k) + "> outside the table");
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Rational angle_bracket_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw std::out_of_range("<" + std::to_string(n) + " " + std::to_string(k) + "> out of range");
  Rational v = binomial(n, k);
  for (int i = 1; i <= n - k; ++i) v += Rational(3) * sign_power(i) * binomial(n - i, k);
  return v;
}

Rational angle_bracket(int n, int k) {
  static std::mutex mutex;
  static std::unique_ptr<AngleBracketTable> table;
  if (n < 0 || k < 0 || k > n)
    throw std::out_of_range("<" + std::to_string(n) + " " + std::to_string(k) + "> out of range");
  std::lock_guard lock(mutex);
  if (!table || table->max_n() < n) table = std::make_unique<AngleBracketTable>(std::max(n, 16));
  return (*table)(n, k);
}

Rational boole_degree(int n, int a) {
  require(n >= 1 && a >= 1, "boole_degree needs n >= 1 and a >= 1");
  return Rational(n) * Rational(a - 1).pow(n - 1);
}

Rational grassmannian_degree(int n, int k) {
  require(1 <= k && k <= n - 1, "grassmannian_degree needs 1 <= k <= n-1");
  std::vector<bool> chosen(static_cast<std::size_t>(n), false);
  std::fill(chosen.begin(), chosen.begin() + k, true);
  Rational sum(0);
  do {
    Rational weight(0);
    for (int i = 0; i < n; ++i)
      if (chosen[static_cast<std::size_t>(i)]) weight += Rational(i + 1);
    Rational term = weight;
    for (int i = 1; i <= n; ++i) {
      if (!chosen[static_cast<std::size_t>(i - 1)]) continue;
      for (int j = 1; j <= n; ++j) {
        if (chosen[static_cast<std::size_t>(j - 1)]) continue;
        term *= (weight + Rational(j - i)) / Rational(i - j);
      }
    }
    sum += term;
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return checked_integer(Rational(2) / Rational(k * (n + 1)) * sum, "grassmannian_degree");
}

Rational holme_gr2(int n) {
  require(n >= 3, "holme_gr2 needs n >= 3");
  return Rational(n, 2) * (Rational(1) - sign_power(n - 1)) / Rational(2);
}

PabQuadratic pab_quadratic(const Rational& a, const Rational& b) {
  const UniPoly p = UniPoly::linear(a - Rational(1), -b) * UniPoly::linear(a, Rational(1) - b);
  return {p.coeff(2), p.coeff(1), p.coeff(0)};
}

Rational gammaab_degree(int n, int a, int b) {
  require(n >= 3 && a >= 1 && b >= 1, "gammaab_degree needs n >= 3 and a, b >= 1");
  const auto [A, B, C] = pab_quadratic(Rational(a), Rational(b));
  Rational sum(0);
  for (int i = 1; i <= n / 2; ++i)
    sum += A.pow(i - 1) * C.pow(i - 1) * (-B).pow(n - 2 * i) /
           (factorial(i) * factorial(i - 1) * factorial(n - 2 * i));
  return checked_integer(factorial(n) * Rational(a + b - 1) * sum, "gammaab_degree");
}

Rational gammaab_divided_difference(int n, int a, int b) {
  require(n >= 3 && a >= 1 && b >= 1, "gammaab_divided_difference needs n >= 3 and a, b >= 1");
  // variables (t, a, b)
  const MultiPoly t = MultiPoly::variable(3, 0);
  const MultiPoly va = MultiPoly::variable(3, 1);
  const MultiPoly vb = MultiPoly::variable(3, 2);
  const MultiPoly one = MultiPoly::constant(3, Rational(1));
  const MultiPoly p = (va * t - t - vb) * (va * t - vb + one);
  const MultiPoly power = p.pow(static_cast<unsigned>(n - 1));
  MultiPoly q(3);
  for (const auto& [e, c] : power.terms())
    if (e[0] == n) q.add_term({0, e[1], e[2]}, c);
  const std::vector<std::size_t> swap_ab{0, 2, 1};
  const MultiPoly difference = exact_divide(q - q.permuted(swap_ab), va - vb);
  const std::vector<Rational> point{Rational(0), Rational(a), Rational(b)};
  return checked_integer(sign_power(n) * Rational(n) * difference.evaluate(point),
                         "gammaab_divided_difference");
}

namespace {

// ((s t + c)^{n-1} - (-1)^{n-1}) / (s t + c + 1), exactly
UniPoly geometric_quotient(const Rational& slope, const Rational& intercept, int n) {
  const UniPoly base = UniPoly::linear(slope, intercept);
  return exact_divide(base.pow(static_cast<unsigned>(n - 1)) - UniPoly(sign_power(n - 1)),
                      UniPoly::linear(slope, intercept + Rational(1)));
}

}  // namespace

Rational abn_degree(int n, int a, int b) {
  require(n >= 3 && a > b && b >= 1, "abn_degree needs n >= 3 and a > b >= 1");
  const Rational ra(a), rb(b), one(1);
  const auto e = static_cast<unsigned>(n - 1);
  const UniPoly first = UniPoly::linear(ra - one, rb).pow(e) * UniPoly::linear(ra, rb - one).pow(e);
  const UniPoly second = UniPoly::linear(rb, ra - one).pow(e) * UniPoly::linear(rb + one, ra - one) *
                         geometric_quotient(rb - one, ra, n);
  return checked_integer(Rational(n) / Rational(a + b) * (first - second).coeff(n), "abn_degree");
}

Rational tevelev_degree(int n, int a) {
  require(n >= 3 && a >= 2, "tevelev_degree needs n >= 3 and a >= 2");
  const Rational ra(a);
  const Rational bracket = Rational(n - 1) * ra.pow(n + 1) - Rational(n + 1) * ra.pow(n - 1) +
                           Rational(2) * sign_power(n - 1);
  return checked_integer(Rational(n) / (ra + Rational(1)).pow(2) * bracket, "tevelev_degree");
}

Rational aa_degree(int n, int a) {
  require(n >= 3 && a >= 1, "aa_degree needs n >= 3 and a >= 1");
  const Rational ra(a), one(1);
  const UniPoly product = UniPoly::linear(one, -one) *
                          UniPoly::linear(ra, ra - one).pow(static_cast<unsigned>(n - 1)) *
                          geometric_quotient(ra - one, ra, n);
  return checked_integer(Rational(n) / Rational(2 * a) * product.coeff(n), "aa_degree");
}

Rational gr3_degree(int n) {
  require(n >= 4, "gr3_degree needs n >= 4");
  Rational sum(0);
  for (int k = 1; k <= n - 1; ++k)
    for (int l = 4; l <= n - 1; ++l) {
      if (k + l < n + 1 || k - 1 > k + l - 5) continue;
      sum += sign_power(k + l + n - 1) * angle_bracket(n - 1, k) * angle_bracket(n - 1, l) *
             angle_bracket(k + l - 5, k - 1);
    }
  return checked_integer(Rational(n, 3) * sum, "gr3_degree");
}

DegreeReport hyperdet_degree(std::vector<int> dims, std::uint64_t seed, const EngineOptions& opts) {
  require(dims.size() >= 2, "hyperdeterminant needs at least two factors");
  require(std::all_of(dims.begin(), dims.end(), [](int d) { return d >= 2; }),
          "hyperdeterminant factors must have size >= 2");
  std::sort(dims.begin(), dims.end());

  std::vector<FactorSpec> specs;
  for (int d : dims) specs.push_back({FactorKind::GL, d});
  const RootSystem rs = RootSystem::build(specs);
  // highest weight L_{(1),1} + ... + L_{(k),1}: top coordinate of each block
  Weight lambda = Weight::zero(rs.ambient_dim());
  for (const auto& f : rs.factors()) lambda[f.offset + f.dim - 1] = Rational(1);

  const int largest = dims.back() - 1;
  int others = 0;
  for (std::size_t u = 0; u + 1 < dims.size(); ++u) others += dims[u] - 1;
  if (largest < others) return degree(rs, lambda, seed, opts);

  const TangentData td = tangent_data(rs, lambda);
  DegreeReport report;
  report.epsilon = td.epsilon;
  report.stabilizer_order = td.stabilizer_order;
  report.method = Method::closed_form;
  if (largest > others) {
    report.degree = Rational(0);
  } else {
    Rational value = factorial(dims.back());
    for (std::size_t u = 0; u + 1 < dims.size(); ++u) value /= factorial(dims[u] - 1);
    report.degree = value;
  }
  report.is_hypersurface = !report.degree.is_zero();
  return report;
}

std::optional<Rational> family_degree(const RootSystem& rs, const Weight& lambda) {
  for (const auto& f : rs.factors())
    if (f.kind != FactorKind::GL) return std::nullopt;
  if (lambda.size() != rs.ambient_dim()) return std::nullopt;

  if (rs.factors().size() > 1) {
    std::vector<int> dims;
    for (const auto& f : rs.factors()) {
      for (std::size_t i = 0; i < f.dim; ++i)
        if (lambda[f.offset + i] != Rational(i + 1 == f.dim ? 1 : 0)) return std::nullopt;
      dims.push_back(f.rank);
    }
    if (std::any_of(dims.begin(), dims.end(), [](int d) { return d < 2; })) return std::nullopt;
    const int largest = *std::max_element(dims.begin(), dims.end());
    int others = -(largest - 1);
    for (int d : dims) others += d - 1;
    if (largest - 1 < others) return std::nullopt;
    return hyperdet_degree(dims).degree;
  }

  // single GL(n): sort non-increasing and drop the sigma_1 component
  const int n = rs.factors()[0].rank;
  std::vector<Rational> c(lambda.coords());
  std::sort(c.begin(), c.end(), std::greater<>());
  const Rational low = c.back();
  std::vector<int> a;
  for (auto& x : c) {
    x -= low;
    if (!x.is_integer()) return std::nullopt;
    a.push_back(static_cast<int>(*x.to_int64()));
  }
  if (a[0] == 0 || n < 2) return std::nullopt;
  int nonzero = 0;
  while (nonzero < n && a[static_cast<std::size_t>(nonzero)] != 0) ++nonzero;
  const bool all_equal = std::all_of(a.begin(), a.begin() + nonzero, [&](int v) { return v == a[0]; });
  if (nonzero == 1) return boole_degree(n, a[0]);
  if (all_equal && a[0] == 1) return grassmannian_degree(n, nonzero);
  if (n < 3) return std::nullopt;
  if (nonzero == 2 && all_equal) return aa_degree(n, a[0]);
  if (nonzero == 2) return abn_degree(n, a[0], a[1]);
  const int b = a[1];
  if (nonzero == n - 1 && a[0] > b &&
      std::all_of(a.begin() + 1, a.begin() + nonzero, [&](int v) { return v == b; }))
    return gammaab_degree(n, a[0] - b, b);
  return std::nullopt;
}

}  // namespace discdeg::closed
