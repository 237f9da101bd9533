#include "discdeg/verify.hpp"

#include <functional>
#include <stdexcept>

#include "discdeg/closed_forms.hpp"
#include "discdeg/fg_polynomial.hpp"
#include "discdeg/gl_symfun.hpp"
#include "discdeg/group_spec.hpp"
#include "discdeg/reference_values.hpp"

namespace discdeg {

namespace {

class Recorder {
 public:
  void check(std::string name, const std::function<std::pair<std::string, std::string>()>& body) {
    CheckResult r{std::move(name), "", "", false};
    try {
      auto [expected, actual] = body();
      r.passed = expected == actual;
      r.expected = std::move(expected);
      r.actual = std::move(actual);
    } catch (const std::exception& e) {
      r.actual = std::string("error: ") + e.what();
    }
    results.push_back(std::move(r));
  }

  std::vector<CheckResult> results;
};

std::string str(const Rational& r) { return r.to_string(); }

// GL(n) weight with the given multiset of coordinates, placed in the engine's
// dominant (non-decreasing) order
Weight gl_weight(std::vector<Rational> coords) {
  std::sort(coords.begin(), coords.end());
  return Weight(std::move(coords));
}

RootSystem gl(int n) { return RootSystem::build({{FactorKind::GL, n}}); }

void reference_checks(Recorder& rec, std::uint64_t seed, const EngineOptions& opts) {
  rec.check("Gr3(C^8) degree", [&] {
    return std::pair{std::string("16"), str(degree(gl(8), gl_weight({1, 1, 1, 0, 0, 0, 0, 0}), seed, opts).degree)};
  });
  rec.check("Gr3(C^8) class on sigma_1", [&] {
    const auto cls = equivariant_class(gl(8), gl_weight({1, 1, 1, 0, 0, 0, 0, 0}), seed, opts);
    for (const auto& c : cls.coords)
      if (c != cls.coords[0]) return std::pair{std::string("-6"), std::string("not proportional to sigma_1")};
    return std::pair{std::string("-6"), str(cls.coords[0])};
  });
  for (const auto& entry : reference::fg_table()) {
    std::string name = "F_G table " + std::string(entry.group);
    for (const auto& fix : reference::fg_corrections())
      if (fix.group == entry.group)
        name += " (x^" + std::to_string(fix.exponents[0]) + "," + std::to_string(fix.exponents[1]) +
                ": printed " + std::to_string(fix.printed) + ", corrected " + std::to_string(fix.corrected) + ")";
    rec.check(name, [&] {
      const RootSystem rs = parse_group(entry.group);
      const auto fg = fg_polynomial(rs, seed, opts);
      const auto expected = reference::corrected_fg(entry, rs.rank());
      const auto names = default_names(rs.rank());
      return std::pair{expected.to_string(names), fg.in_x.to_string(names)};
    });
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    rec.check("F_G for " + std::to_string(n) + "A1", [&] {
      std::vector<FactorSpec> specs(n, FactorSpec{FactorKind::A, 1});
      const auto fg = fg_polynomial(RootSystem::build(specs), seed, opts);
      return std::pair{reference::fg_multiple_a1(n).to_string(), fg.in_y.to_string()};
    });
  }
  for (auto [group, value] : {std::pair{"A2", "6"}, {"B2", "24"}, {"G2", "916"}}) {
    rec.check(std::string(group) + " at w:1,1", [&, group, value] {
      const RootSystem rs = parse_group(group);
      return std::pair{std::string(value), str(degree_symmetric(rs, parse_weight(rs, "w:1,1"), seed, opts).degree)};
    });
  }
  rec.check("adjoint GL3", [&] {
    return std::pair{std::string("6"), str(degree(gl(3), gl_weight({2, 1, 0}), seed, opts).degree)};
  });
  rec.check("Boole GL3 3L1", [&] {
    return std::pair{str(closed::boole_degree(3, 3)), str(degree(gl(3), gl_weight({3, 0, 0}), seed, opts).degree)};
  });
  for (int n : {3, 4, 5, 6}) {
    rec.check("Holme Gr2(C^" + std::to_string(n) + ")", [&, n] {
      std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
      c[0] = c[1] = Rational(1);
      return std::pair{str(closed::holme_gr2(n)), str(degree(gl(n), gl_weight(c), seed, opts).degree)};
    });
  }
  rec.check("Grassmannian (8,3)", [] { return std::pair{std::string("16"), str(closed::grassmannian_degree(8, 3))}; });
  rec.check("Grassmannian (4,2)", [] { return std::pair{std::string("2"), str(closed::grassmannian_degree(4, 2))}; });
  rec.check("gr3 n=8", [] { return std::pair{std::string("16"), str(closed::gr3_degree(8))}; });
  rec.check("hyperdeterminant 2x2x3", [&] {
    return std::pair{std::string("6"), str(closed::hyperdet_degree({2, 2, 3}, seed, opts).degree)};
  });
  rec.check("hyperdeterminant 2x2x4", [&] {
    const auto r = closed::hyperdet_degree({2, 2, 4}, seed, opts);
    return std::pair{std::string("0 hypersurface=0"),
                     str(r.degree) + " hypersurface=" + (r.is_hypersurface ? "1" : "0")};
  });
  rec.check("angle bracket table rows 0..5", [] {
    std::string expected, actual;
    const auto rows = reference::angle_bracket_rows();
    for (std::size_t n = 0; n < rows.size(); ++n)
      for (std::size_t k = 0; k < rows[n].size(); ++k) {
        expected += std::to_string(rows[n][k]) + " ";
        actual += str(closed::angle_bracket(static_cast<int>(n), static_cast<int>(k))) + " ";
      }
    return std::pair{expected, actual};
  });
  for (int n = 2; n <= 5; ++n) {
    rec.check("<sigma_1 Delta, sigma_1 Delta> n=" + std::to_string(n), [n] {
      const auto blocks = gl::Blocks::single(static_cast<std::size_t>(n));
      std::vector<Rational> ones(static_cast<std::size_t>(n), Rational(1));
      const MultiPoly f = MultiPoly::linear(ones) * gl::vandermonde(blocks);
      return std::pair{str(Rational(n) * double_factorial_odd(n - 1)), str(gl::scalar_product(f, f))};
    });
  }
  rec.check("gammaab n=3 family", [] {
    for (int a = 1; a <= 5; ++a)
      for (int b = 1; b <= 5; ++b)
        if (closed::gammaab_degree(3, a, b) != Rational(6 * (a + b - 1) * (2 * a * b - a - b + 1)))
          return std::pair{std::string("match"), "mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b)};
    return std::pair{std::string("match"), std::string("match")};
  });
  rec.check("two-row family at b=1", [] {
    for (int n = 3; n <= 7; ++n)
      for (int a = 2; a <= 5; ++a)
        if (closed::abn_degree(n, a, 1) != closed::tevelev_degree(n, a))
          return std::pair{std::string("match"), "mismatch at n=" + std::to_string(n) + " a=" + std::to_string(a)};
    return std::pair{std::string("match"), std::string("match")};
  });
}

void oracle_checks(Recorder& rec, std::uint64_t seed, const EngineOptions& opts) {
  // every nonzero dominant GL(n) weight with entries 0..3, n <= 4
  for (int n = 1; n <= 4; ++n) {
    const RootSystem rs = gl(n);
    const auto blocks = gl::Blocks::single(static_cast<std::size_t>(n));
    std::vector<int> entries(static_cast<std::size_t>(n), 0);
    while (true) {
      std::size_t i = entries.size();
      while (i > 0 && entries[i - 1] == 3) --i;
      if (i == 0) break;
      ++entries[i - 1];
      for (std::size_t j = i; j < entries.size(); ++j) entries[j] = entries[i - 1];
      std::vector<Rational> coords(entries.begin(), entries.end());
      std::string label = "GL" + std::to_string(n) + " L:";
      for (std::size_t j = 0; j < coords.size(); ++j) label += (j ? "," : "") + coords[j].to_string();
      rec.check("methods agree " + label, [&, coords] {
        const Weight w(coords);
        const std::string orbit = str(degree(rs, w, seed, opts).degree);
        std::string all = orbit;
        auto add = [&](const Rational& v) {
          const std::string s = str(v);
          if (s != orbit) all += " != " + s;
        };
        add(degree_symmetric(rs, w, seed, opts).degree);
        add(gl::degree_via_jacobi(blocks, coords));
        add(gl::degree_via_permanent(blocks, coords));
        add(gl::degree_via_scalar_product(static_cast<std::size_t>(n), coords));
        return std::pair{orbit, all};
      });
    }
  }
  for (int n = 6; n <= 9; ++n)
    rec.check("gr3 closed form vs engine n=" + std::to_string(n), [&, n] {
      std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
      c[0] = c[1] = c[2] = Rational(1);
      return std::pair{str(closed::gr3_degree(n)), str(degree(gl(n), gl_weight(c), seed, opts).degree)};
    });
  for (int n = 3; n <= 6; ++n)
    rec.check("gammaab(n,1,1) vs engine n=" + std::to_string(n), [&, n] {
      std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
      c[0] = Rational(2);
      for (int i = 1; i < n - 1; ++i) c[static_cast<std::size_t>(i)] = Rational(1);
      return std::pair{str(closed::gammaab_degree(n, 1, 1)), str(degree(gl(n), gl_weight(c), seed, opts).degree)};
    });
  for (int n = 3; n <= 5; ++n)
    for (int a = 2; a <= 4; ++a)
      for (int b = 1; b < a; ++b)
        rec.check("abn vs engine " + std::to_string(n) + "," + std::to_string(a) + "," + std::to_string(b),
                  [&, n, a, b] {
                    std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
                    c[0] = Rational(a);
                    c[1] = Rational(b);
                    return std::pair{str(closed::abn_degree(n, a, b)),
                                     str(degree(gl(n), gl_weight(c), seed, opts).degree)};
                  });
  rec.check("hyperdeterminant 2x2x2 engine vs permanent", [&] {
    const auto report = closed::hyperdet_degree({2, 2, 2}, seed, opts);
    const gl::Blocks blocks{{2, 2, 2}};
    const std::vector<Rational> coeffs{1, 0, 1, 0, 1, 0};
    return std::pair{str(gl::degree_via_permanent(blocks, coeffs)), str(report.degree)};
  });
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "reference" || name == "paper") return Suite::reference;
  if (name == "oracle") return Suite::oracle;
  if (name == "all") return Suite::all;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::vector<CheckResult> run_verification(Suite suite, std::uint64_t seed, const EngineOptions& opts) {
  Recorder rec;
  if (suite != Suite::oracle) reference_checks(rec, seed, opts);
  if (suite != Suite::reference) oracle_checks(rec, seed, opts);
  return std::move(rec.results);
}

}  // namespace discdeg
