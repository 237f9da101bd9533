#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <numeric>
#include <random>

#include "discdeg/degree_engine.hpp"
#include "discdeg/errors.hpp"
#include "discdeg/gl_symfun.hpp"
#include "oracles.hpp"

using namespace discdeg;
using gl::Blocks;
using gl::ExponentVector;
using oracle::rationals;

namespace {

MultiPoly var(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }

MultiPoly sigma1(std::size_t n) {
  MultiPoly s(n);
  for (std::size_t i = 0; i < n; ++i) s += var(n, i);
  return s;
}

MultiPoly monomial(const ExponentVector& e) { return MultiPoly::monomial(e); }

// All exponent vectors of length n with entries >= 0 summing to total.
void compositions(std::size_t n, int total, ExponentVector& cur, const std::function<void(const ExponentVector&)>& f) {
  if (cur.size() + 1 == n) {
    cur.push_back(total);
    f(cur);
    cur.pop_back();
    return;
  }
  for (int k = 0; k <= total; ++k) {
    cur.push_back(k);
    compositions(n, total - k, cur, f);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("lambda plus") {
  // n = 2, R^- = {L2 - L1}: a L1 (a L1 + L2 - L1)
  for (int a = 1; a <= 4; ++a) {
    const auto lp = gl::lambda_plus(Blocks::single(2), rationals({a, 0}));
    const MultiPoly l1 = var(2, 0), l2 = var(2, 1);
    CHECK(lp == (Rational(a) * l1) * (Rational(a) * l1 + l2 - l1));
    CHECK(lp.is_homogeneous());
  }
  const auto sym = gl::lambda_plus(Blocks::single(2), rationals({1, 1}));
  CHECK(*sym.total_degree() == 2);

  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> d(-5, 5);
  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<Rational> coeffs(n), t(n);
    for (auto& c : coeffs) c = d(rng);
    for (auto& c : t) c = Rational(d(rng), 7);
    const auto lp = gl::lambda_plus(Blocks::single(n), coeffs);
    CHECK(lp.is_homogeneous());
    if (!lp.is_zero()) CHECK(static_cast<std::size_t>(*lp.total_degree()) == n * (n - 1) / 2 + 1);
    Rational lam;
    for (std::size_t i = 0; i < n; ++i) lam += coeffs[i] * t[i];
    Rational expected = lam;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) expected *= lam + t[i] - t[j];
    CHECK(lp.evaluate(t) == expected);
  }
  CHECK_THROWS_AS(gl::lambda_plus(Blocks::single(7), std::vector<Rational>(7, 1)), BoundExceeded);
}

TEST_CASE("vandermonde and antisymmetrization") {
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(gl::vandermonde(Blocks::single(n)) == oracle::leibniz_vandermonde(n));
    CHECK(gl::antisymmetrize(monomial(gl::staircase(n)), Blocks::single(n)) == oracle::leibniz_vandermonde(n));
  }
}

TEST_CASE("Jacobi symmetrizer values") {
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(gl::jacobi_symmetrize(monomial(gl::staircase(n))) == MultiPoly::constant(n, 1));
    if (n >= 2) CHECK(gl::jacobi_symmetrize(monomial(gl::sigma_pattern(n))) == sigma1(n));
  }
  CHECK(gl::jacobi_symmetrize(monomial({2, 2, 0})).is_zero());
  CHECK(gl::jacobi_symmetrize(monomial({3, 1, 1, 0})).is_zero());

  // symmetric factors pass through
  std::mt19937_64 rng(12);
  for (int k = 0; k < 5; ++k) {
    const auto g = oracle::random_poly(rng, 3, 4, 4);
    const MultiPoly s = sigma1(3) * sigma1(3) + var(3, 0) * var(3, 1) * var(3, 2);
    CHECK(gl::jacobi_symmetrize(g * s) == s * gl::jacobi_symmetrize(g));
  }
}

TEST_CASE("J of every exponent vector of weight C(n,2)+1 is 0 or +-sigma_1") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const int total = static_cast<int>(n * (n - 1) / 2 + 1);
    ExponentVector mu = gl::sigma_pattern(n);
    std::sort(mu.begin(), mu.end());
    ExponentVector cur;
    std::size_t count = 0, nonzero = 0;
    compositions(n, total, cur, [&](const ExponentVector& nu) {
      ++count;
      const auto j = gl::jacobi_symmetrize(monomial(nu));
      ExponentVector sorted = nu;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != mu) {
        CHECK(j.is_zero());
        return;
      }
      ++nonzero;
      // sign of the permutation sorting nu into decreasing order
      std::vector<std::size_t> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return nu[a] > nu[b]; });
      CHECK(j == Rational(oracle::permutation_sign(order)) * sigma1(n));
    });
    CHECK(count == static_cast<std::size_t>(oracle::binom(total + static_cast<long long>(n) - 1, static_cast<long long>(n) - 1)));
    CHECK(Rational(static_cast<long long>(nonzero)) == factorial(static_cast<int>(n)));
  }
}

TEST_CASE("nu-permanents") {
  // (2,1)-permanent of (aL1+a'L2)(bL1+b'L2)(cL1+c'L2)
  const long long a = 2, a_ = 3, b = 5, b_ = 7, c = 11, c_ = 13;
  const MultiPoly f = (Rational(a) * var(2, 0) + Rational(a_) * var(2, 1)) *
                      (Rational(b) * var(2, 0) + Rational(b_) * var(2, 1)) *
                      (Rational(c) * var(2, 0) + Rational(c_) * var(2, 1));
  CHECK(gl::nu_permanent(f, {2, 1}) ==
        a * b * c_ + a * b_ * c + a_ * b * c - a_ * b_ * c - a_ * b * c_ - a * b_ * c_);

  std::mt19937_64 rng(21);
  for (int k = 0; k < 10; ++k) {
    const auto g = oracle::random_poly(rng, 3, 4, 12);
    CHECK(gl::nu_permanent(g, {2, 2, 1}) == 0);
    CHECK(gl::nu_permanent(g, {1, 3, 0}) == -gl::nu_permanent(g, {3, 1, 0}));
    CHECK(gl::nu_permanent(g, {0, 1, 3}) == -gl::nu_permanent(g, {3, 1, 0}));
  }
  for (std::size_t n = 1; n <= 5; ++n)
    CHECK(gl::nu_permanent(gl::vandermonde(Blocks::single(n)), gl::staircase(n)) == factorial(static_cast<int>(n)));
}

TEST_CASE("class routes on small examples") {
  const auto cls = gl::class_via_jacobi(Blocks::single(3), rationals({2, 1, 0}));
  CHECK(cls == Rational(-6) * sigma1(3));
  CHECK(gl::class_via_permanent(Blocks::single(3), rationals({2, 1, 0})) == rationals({-6}));
  CHECK(gl::degree_via_jacobi(Blocks::single(3), rationals({2, 1, 0})) == 6);
  CHECK(gl::degree_via_permanent(Blocks::single(3), rationals({2, 1, 0})) == 6);
  CHECK(gl::degree_via_permanent(Blocks::single(4), rationals({1, 1, 0, 0})) == 2);
  CHECK(gl::degree_via_permanent(Blocks::single(3), rationals({3, 0, 0})) == 12);
  for (int a = 1; a <= 5; ++a) CHECK(gl::degree_via_jacobi(Blocks::single(2), rationals({a, 0})) == 2 * (a - 1));
}

TEST_CASE("scalar product") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const MultiPoly s = sigma1(n) * gl::vandermonde(Blocks::single(n));
    CHECK(gl::scalar_product(s, s) == static_cast<long long>(n) * oracle::double_factorial(2 * static_cast<long long>(n) - 3));
  }
  CHECK(gl::scalar_product(MultiPoly::constant(2, 1), MultiPoly::constant(2, 1)) == 1);
  std::mt19937_64 rng(31);
  for (int k = 0; k < 8; ++k) {
    const auto f = oracle::random_poly(rng, 3, 3, 4);
    const auto g = oracle::random_poly(rng, 3, 3, 4);
    CHECK(gl::scalar_product(f, g) == gl::scalar_product(g, f));
    const auto h = oracle::random_poly(rng, 3, 3, 4);
    CHECK(gl::scalar_product(f + h, g) == gl::scalar_product(f, g) + gl::scalar_product(h, g));
  }
}

TEST_CASE("degree via the scalar product") {
  CHECK(gl::degree_via_scalar_product(3, rationals({2, 1, 0})) == 6);
  CHECK(gl::degree_via_scalar_product(2, rationals({3, 0})) == 4);
  const auto engine = degree(oracle::gl(4), Weight{1, 1, 1, 1}, 1).degree;
  CHECK(gl::degree_via_scalar_product(4, rationals({1, 1, 1, 1})) == engine);
  CHECK_THROWS_AS(gl::degree_via_scalar_product(3, rationals({1, 0, -1})), std::invalid_argument);
}

TEST_CASE("combinatorial routes agree with the engine class on the small sweep") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto& v : oracle::sorted_vectors(n, 0, 3)) {
      const Weight lambda(v);
      if (lambda.is_zero()) continue;
      INFO(lambda.to_string());
      const auto rs = oracle::gl(static_cast<int>(n));
      const auto engine_class = equivariant_class(rs, lambda, 1);
      const auto jac = gl::class_via_jacobi(Blocks::single(n), v);
      const auto perm = gl::class_via_permanent(Blocks::single(n), v);
      REQUIRE(perm.size() == 1);
      CHECK(jac == perm[0] * sigma1(n));
      for (const auto& c : engine_class.coords) CHECK(c == perm[0]);
      const auto d = degree(rs, lambda, 1).degree;
      CHECK(gl::degree_via_jacobi(Blocks::single(n), v) == d);
      CHECK(gl::degree_via_permanent(Blocks::single(n), v) == d);
      CHECK(gl::degree_via_scalar_product(n, v) == d);
    }
}

TEST_CASE("permanent route on products of GL blocks") {
  const Blocks blocks{{2, 2, 2}};
  const auto rs = RootSystem::build({{FactorKind::GL, 2}, {FactorKind::GL, 2}, {FactorKind::GL, 2}});
  const auto coeffs = rationals({1, 0, 1, 0, 1, 0});
  const auto engine = degree(rs, Weight(rationals({0, 1, 0, 1, 0, 1})), 1).degree;
  CHECK(engine == 4);
  CHECK(gl::degree_via_permanent(blocks, coeffs) == engine);
  CHECK(gl::degree_via_jacobi(blocks, coeffs) == engine);
  CHECK(oracle::gl_blocks_degree({2, 2, 2}, coeffs) == engine);
}

TEST_CASE("symmetry data") {
  const auto s = gl::symmetry_of(Blocks::single(3), rationals({1, 1, 0}));
  CHECK(s.epsilon == -1);
  CHECK(s.stabilizer_order == 2);
  const auto r = gl::symmetry_of(Blocks::single(4), rationals({3, 2, 1, 0}));
  CHECK(r.epsilon == 1);
  CHECK(r.stabilizer_order == 1);
  CHECK(gl::dominant_form(Blocks{{2, 2}}, rationals({0, 1, 3, 2})) == rationals({1, 0, 3, 2}));
}
