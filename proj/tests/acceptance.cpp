// One PASS/FAIL line per acceptance criterion, exact equality throughout.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "discdeg/closed_forms.hpp"
#include "discdeg/degree_engine.hpp"
#include "discdeg/fg_polynomial.hpp"
#include "discdeg/gl_symfun.hpp"
#include "discdeg/group_spec.hpp"
#include "discdeg/reference_values.hpp"
#include "oracles.hpp"

using namespace discdeg;
using oracle::gl_dominant;
using oracle::rationals;

namespace {

// Collects failures for one criterion; the first few are reported.
class Outcome {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (ok) return;
    if (failures_.size() < 4) failures_.push_back(what());
    ++failed_;
  }
  template <class A, class B>
  void equal(const A& actual, const B& expected, const std::string& label) {
    expect(actual == expected, [&] {
      std::ostringstream os;
      os << label << ": expected " << expected << ", got " << actual;
      return os.str();
    });
  }
  void note(std::string s) { notes_.push_back(std::move(s)); }

  bool passed() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    if (failed_ == 0) {
      os << checks_ << " checks";
    } else {
      os << failed_ << "/" << checks_ << " checks failed";
      for (const auto& f : failures_) os << "; " << f;
    }
    for (const auto& n : notes_) os << "; " << n;
    return os.str();
  }

 private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_, notes_;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;  // 0: no limit
  std::function<void(Outcome&)> body;
};

RootSystem gl(int n) { return oracle::gl(n); }

// GL(n) weight whose multiset of coordinates is `leading` padded with zeros
Weight gl_weight(int n, std::vector<Rational> leading) {
  leading.resize(static_cast<std::size_t>(n), 0);
  return gl_dominant(std::move(leading));
}

std::string str(const Rational& r) { return r.to_string(); }

// Every engine call: both generic points give the same integral value.
void checked_engine_call(Outcome& o, const RootSystem& rs, const Weight& lambda, const Rational& expected,
                         const std::string& label) {
  const auto report = degree(rs, lambda, 1);
  o.equal(report.degree, expected, label);
  o.expect(report.points_used.size() >= 2, [&] { return label + ": fewer than two points"; });
  o.expect(report.degree.is_integer() && report.degree >= 0, [&] { return label + ": not a nonnegative integer"; });
  const auto orbit = weyl_orbit(rs, lambda);
  std::vector<Rational> per_point;
  for (const auto& p : report.points_used)
    per_point.push_back(-(class_sum_orbit(orbit, p.coords, 1) - class_sum_orbit(orbit, p.coords, 0)));
  for (const auto& v : per_point) o.equal(v, report.degree, label + " at a single point");
  o.equal(report.is_hypersurface, report.degree != 0, label + " hypersurface flag");
}

std::vector<std::vector<Rational>> dominant_y_grid(std::size_t rank, int max) {
  std::vector<std::vector<Rational>> out;
  std::vector<int> y(rank, 0);
  while (true) {
    std::size_t i = 0;
    while (i < rank && y[i] == max) y[i++] = 0;
    if (i == rank) break;
    ++y[i];
    out.emplace_back(y.begin(), y.end());
  }
  return out;
}

void grassmannian_example(Outcome& o) {
  const Weight lambda = gl_weight(8, rationals({1, 1, 1}));
  o.equal(weyl_orbit(gl(8), lambda).points.size(), std::size_t{56}, "orbit size");
  o.equal(degree(gl(8), lambda, 1).degree, Rational(16), "degree");
  const auto cls = equivariant_class(gl(8), lambda, 1);
  for (std::size_t i = 0; i < cls.coords.size(); ++i) o.equal(cls.coords[i], Rational(-6), "sigma_1 coefficient");
}

void fg_tables(Outcome& o) {
  for (const auto& entry : reference::fg_table()) {
    const RootSystem rs = parse_group(entry.group);
    const auto names = default_names(rs.rank());
    const auto fg = fg_polynomial(rs, 1);
    const auto printed = reference::parse_fg(entry, rs.rank());
    const std::string group(entry.group);
    o.expect(fg.in_x == printed, [&] {
      std::ostringstream os;
      os << group << " differs from the printed table:";
      const MultiPoly diff = fg.in_x - printed;
      for (const auto& [e, c] : diff.terms())
        os << " [" << MultiPoly::monomial(e).to_string(names) << ": printed " << printed.coefficient(e)
           << ", computed " << fg.in_x.coefficient(e) << "]";
      return os.str();
    });
    if (fg.in_x == printed) continue;
    // which of the two polynomials does the orbit sum agree with?
    int agree_computed = 0, agree_printed = 0, points = 0;
    for (const auto& y : dominant_y_grid(rs.rank(), 2)) {
      const Weight lambda = rs.from_fundamental(y);
      const auto td = tangent_data(rs, lambda);
      std::vector<Rational> x(y);
      for (auto& c : x) c -= 1;
      const Rational scale = Rational(td.epsilon) / Rational(static_cast<long long>(td.stabilizer_order));
      const Rational engine = degree(rs, lambda, 1).degree;
      ++points;
      agree_computed += engine == scale * fg.in_x.evaluate(x);
      agree_printed += engine == scale * printed.evaluate(x);
    }
    o.note(group + ": orbit sum agrees with the computed polynomial at " + std::to_string(agree_computed) + "/" +
           std::to_string(points) + " weights, with the printed one at " + std::to_string(agree_printed) + "/" +
           std::to_string(points));
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::vector<FactorSpec> specs(n, FactorSpec{FactorKind::A, 1});
    o.equal(fg_polynomial(RootSystem::build(specs), 1).in_y.to_string(), reference::fg_multiple_a1(n).to_string(),
            std::to_string(n) + "A1");
  }
}

void boole_sweep(Outcome& o) {
  for (int n = 2; n <= 6; ++n)
    for (int a = 1; a <= 5; ++a) {
      const Rational expected = Rational(n) * Rational(a - 1).pow(n - 1);
      const std::string label = "GL" + std::to_string(n) + " a=" + std::to_string(a);
      o.equal(degree(gl(n), gl_weight(n, rationals({a})), 1).degree, expected, label);
      o.equal(closed::boole_degree(n, a), expected, label + " closed form");
    }
}

void holme(Outcome& o) {
  for (int n = 3; n <= 8; ++n) {
    const Rational expected = Rational(n, 2) * Rational(1 - (n % 2 ? 1 : -1), 2);
    const auto r = degree(gl(n), gl_weight(n, rationals({1, 1})), 1);
    o.equal(r.degree, expected, "GL" + std::to_string(n));
    if (n % 2) o.expect(!r.is_hypersurface, [&] { return "GL" + std::to_string(n) + " flagged as hypersurface"; });
  }
}

void adjoint_family(Outcome& o) {
  for (int n = 3; n <= 6; ++n) {
    const Rational expected(n * (n - 1));
    o.equal(closed::gammaab_degree(n, 1, 1), expected, "closed form n=" + std::to_string(n));
    std::vector<Rational> lead(static_cast<std::size_t>(n - 1), 1);
    lead[0] = 2;
    o.equal(degree(gl(n), gl_weight(n, lead), 1).degree, expected, "engine n=" + std::to_string(n));
  }
  for (int n = 3; n <= 8; ++n)
    for (int a = 1; a <= 5; ++a)
      for (int b = 1; b <= 5; ++b) {
        const auto label = std::to_string(n) + "," + std::to_string(a) + "," + std::to_string(b);
        const Rational v = closed::gammaab_degree(n, a, b);
        o.equal(v, closed::gammaab_degree(n, b, a), "symmetry " + label);
        o.equal(v, closed::gammaab_divided_difference(n, a, b), "two forms " + label);
        if (n == 3) o.equal(v, Rational(6 * (a + b - 1) * (2 * a * b - a - b + 1)), "n=3 " + label);
      }
}

void two_row_family(Outcome& o) {
  for (int n = 3; n <= 7; ++n)
    for (int a = 2; a <= 5; ++a) {
      const Rational tev = Rational(n, (a + 1) * (a + 1)) *
                           (Rational(n - 1) * Rational(a).pow(n + 1) - Rational(n + 1) * Rational(a).pow(n - 1) +
                            Rational(2 * (n % 2 ? 1 : -1)));
      o.equal(closed::abn_degree(n, a, 1), tev, "b=1 n=" + std::to_string(n) + " a=" + std::to_string(a));
    }
  for (int n = 3; n <= 5; ++n)
    for (int a = 2; a <= 4; ++a)
      for (int b = 1; b < a; ++b)
        o.equal(closed::abn_degree(n, a, b), degree(gl(n), gl_weight(n, rationals({a, b})), 1).degree,
                "engine " + std::to_string(n) + "," + std::to_string(a) + "," + std::to_string(b));
}

void hyperdeterminants(Outcome& o) {
  const auto boundary = closed::hyperdet_degree({2, 2, 3});
  o.equal(boundary.degree, Rational(6), "2x2x3");
  o.expect(boundary.is_hypersurface, [] { return std::string("2x2x3 not flagged as hypersurface"); });
  const auto above = closed::hyperdet_degree({2, 2, 4});
  o.equal(above.degree, Rational(0), "2x2x4");
  o.expect(!above.is_hypersurface, [] { return std::string("2x2x4 flagged as hypersurface"); });
  const auto cube = closed::hyperdet_degree({2, 2, 2});
  const gl::Blocks blocks{{2, 2, 2}};
  o.equal(cube.degree, gl::degree_via_permanent(blocks, rationals({1, 0, 1, 0, 1, 0})), "2x2x2 engine vs permanent");
  o.note("2x2x2 = " + str(cube.degree));
}

void gr3(Outcome& o) {
  for (int n = 6; n <= 9; ++n)
    o.equal(closed::gr3_degree(n), degree(gl(n), gl_weight(n, rationals({1, 1, 1})), 1).degree,
            "n=" + std::to_string(n));
  const auto rows = reference::angle_bracket_rows();
  for (std::size_t n = 0; n < rows.size(); ++n)
    for (std::size_t k = 0; k <= n; ++k)
      o.equal(closed::angle_bracket(static_cast<int>(n), static_cast<int>(k)), Rational(rows[n][k]),
              "table <" + std::to_string(n) + " " + std::to_string(k) + ">");
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k)
      o.equal(closed::angle_bracket(n, k), closed::angle_bracket_binomial(n, k),
              "binomial <" + std::to_string(n) + " " + std::to_string(k) + ">");
}

void cross_method(Outcome& o) {
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& v : oracle::sorted_vectors(n, 0, 3)) {
      const Weight lambda(v);
      if (lambda.is_zero()) continue;
      ++cases;
      const auto rs = gl(static_cast<int>(n));
      const std::string label = "GL" + std::to_string(n) + " " + lambda.to_string();
      const gl::Blocks blocks = gl::Blocks::single(n);
      const Rational d = degree(rs, lambda, 1).degree;
      o.equal(degree_symmetric(rs, lambda, 1).degree, d, label + " symmetric");
      o.equal(gl::degree_via_jacobi(blocks, v), d, label + " jacobi");
      o.equal(gl::degree_via_permanent(blocks, v), d, label + " permanent");
      o.equal(gl::degree_via_scalar_product(n, v), d, label + " scalar product");
    }
  o.note(std::to_string(cases) + " weights");
}

void property_suites(Outcome& o) {
  // two-point agreement and integrality on engine calls
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto& v : oracle::sorted_vectors(n, 0, 2)) {
      if (Weight(v).is_zero()) continue;
      checked_engine_call(o, gl(static_cast<int>(n)), Weight(v), oracle::gl_degree(v),
                          "GL" + std::to_string(n) + " " + Weight(v).to_string());
    }

  // shift and dual invariance on a 20-case grid
  const std::vector<std::pair<std::vector<long long>, int>> grid{
      {{0, 1}, 1},          {{0, 2}, 2},          {{0, 3}, -1},         {{0, 1, 2}, 1},
      {{0, 1, 2}, 3},       {{0, 0, 1}, 2},       {{0, 1, 1}, -2},      {{0, 0, 3}, 1},
      {{1, 1, 3}, 2},       {{0, 2, 4}, -1},      {{0, 0, 1, 1}, 1},    {{0, 1, 1, 3}, 2},
      {{0, 0, 0, 2}, 3},    {{0, 1, 2, 3}, -2},   {{0, 0, 1, 2}, 1},    {{1, 2, 2, 2}, 2},
      {{0, 0, 0, 1, 1}, 1}, {{0, 0, 1, 1, 2}, 2}, {{0, 1, 1, 1, 3}, 1}, {{0, 0, 0, 0, 2}, -1},
  };
  for (const auto& [l, a] : grid) {
    const std::vector<Rational> v(l.begin(), l.end());
    const std::string label = "shift/dual " + Weight(v).to_string() + " a=" + std::to_string(a);
    o.expect(weight_shift_check(gl(static_cast<int>(v.size())), Weight(v), a, 1), [&] { return label; });
  }

  // J(L^nu) in {0, +-sigma_1} for all |nu| = C(n,2)+1, n <= 5
  for (std::size_t n = 2; n <= 5; ++n) {
    MultiPoly s1(n);
    for (std::size_t i = 0; i < n; ++i) s1 += MultiPoly::variable(n, i);
    const int total = static_cast<int>(n * (n - 1) / 2 + 1);
    std::vector<int> nu(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i + 1 == n) {
        nu[i] = left;
        const auto j = gl::jacobi_symmetrize(MultiPoly::monomial(nu));
        o.expect(j.is_zero() || j == s1 || j == -s1, [&] { return "J not in {0, +-sigma_1}"; });
        return;
      }
      for (int k = 0; k <= left; ++k) {
        nu[i] = k;
        rec(i + 1, left - k);
      }
    };
    rec(0, total);
  }

  // <sigma_1 Delta, sigma_1 Delta> = n (2n-3)!!
  for (std::size_t n = 1; n <= 5; ++n) {
    MultiPoly s1(n);
    for (std::size_t i = 0; i < n; ++i) s1 += MultiPoly::variable(n, i);
    const MultiPoly f = s1 * oracle::leibniz_vandermonde(n);
    o.equal(gl::scalar_product(f, f),
            Rational(static_cast<long long>(n) * oracle::double_factorial(2 * static_cast<long long>(n) - 3)),
            "scalar product n=" + std::to_string(n));
  }

  // linear fit E(t,u) = f ((n/|lambda|) u + sigma_1(t)) on 10 random GL cases
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<int> size(2, 5), entry(0, 4);
  for (int cases = 0; cases < 10;) {
    const int n = size(rng);
    std::vector<Rational> v(static_cast<std::size_t>(n));
    for (auto& c : v) c = entry(rng);
    const Rational total = std::accumulate(v.begin(), v.end(), Rational(0));
    if (total == 0) continue;
    ++cases;
    const Weight lambda = gl_dominant(v);
    const auto t1 = pick_generic_point(gl(n), 10).coords;
    const auto t2 = pick_generic_point(gl(n), 20).coords;
    auto s1 = [](const std::vector<Rational>& t) { return std::accumulate(t.begin(), t.end(), Rational(0)); };
    const Rational f = class_sum_orbit(gl(n), lambda, t1, 0) / s1(t1);
    const Rational slope = Rational(n) / total;
    const std::string label = "linear fit " + lambda.to_string();
    o.equal(class_sum_orbit(gl(n), lambda, t2, 0), f * s1(t2), label + " (t2,0)");
    o.equal(class_sum_orbit(gl(n), lambda, t1, 3), f * (3 * slope + s1(t1)), label + " (t1,3)");
    o.equal(class_sum_orbit(gl(n), lambda, t2, -2), f * (-2 * slope + s1(t2)), label + " (t2,-2)");
  }

  // deg = (epsilon/|W_lambda|) F_G(lambda) on every rank <= 2 semisimple type
  for (const auto& spec : {"A1", "A1+A1", "A2", "B2", "C2", "G2"}) {
    const auto rs = parse_group(spec);
    const auto fg = fg_polynomial(rs, 1);
    for (const auto& y : dominant_y_grid(rs.rank(), 3)) {
      const Weight lambda = rs.from_fundamental(y);
      o.equal(degree(rs, lambda, 1).degree, degree_from_fg(rs, fg, lambda).degree,
              std::string(spec) + " " + lambda.to_string());
    }
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Gr3(C^8): degree 16, class -6 sigma_1", 1.0, grassmannian_example},
      {2, "universal polynomials match the printed tables; n A1 for n <= 5", 10.0, fg_tables},
      {3, "Boole sweep 2 <= n <= 6, 1 <= a <= 5", 0, boole_sweep},
      {4, "Gr2 degrees for 3 <= n <= 8", 0, holme},
      {5, "adjoint family: n(n-1), symmetry, two forms, n = 3 factorization", 0, adjoint_family},
      {6, "two-row family: b = 1 closed form and engine agreement", 0, two_row_family},
      {7, "hyperdeterminants 2x2x3, 2x2x4, 2x2x2", 0, hyperdeterminants},
      {8, "Gr3 bracket formula and bracket table", 0, gr3},
      {9, "cross-method sweep on GL(n), n <= 4, entries 0..3", 60.0, cross_method},
      {10, "property suites", 0, property_suites},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.expect(false, [&] { return std::string("exception: ") + e.what(); });
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0)
      o.expect(secs < c.time_limit_s, [&] {
        std::ostringstream os;
        os << "runtime " << secs << " s exceeds " << c.time_limit_s << " s";
        return os.str();
      });
    const bool ok = o.passed();
    failed += !ok;
    std::ostringstream t;
    t.setf(std::ios::fixed);
    t.precision(3);
    t << secs;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << t.str() << " s] "
              << o.summary() << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
