#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "discdeg/degree_engine.hpp"
#include "discdeg/rational.hpp"

namespace discdeg::closed {

/// Integers <n k> for 0 <= k <= n <= max_n, built by the Pascal rule from
/// <n 0> = 1 (n even) / -2 (n odd) and <n n> = 1, and checked against the
/// binomial expression at construction.
class AngleBracketTable {
 public:
  explicit AngleBracketTable(int max_n);

  int max_n() const { return static_cast<int>(rows_.size()) - 1; }
  const Rational& operator()(int n, int k) const;
  const std::vector<Rational>& row(int n) const { return rows_.at(static_cast<std::size_t>(n)); }

 private:
  std::vector<std::vector<Rational>> rows_;
};

/// C(n,k) + 3 sum_{i>=1} (-1)^i C(n-i,k)
Rational angle_bracket_binomial(int n, int k);
/// Table lookup from a shared, lazily grown table. Throws std::out_of_range
/// unless 0 <= k <= n.
Rational angle_bracket(int n, int k);

/// n (a-1)^{n-1}, for lambda = a L_1 on GL(n).
Rational boole_degree(int n, int a);

/// Dual of Gr_k(C^n) in its Pluecker embedding, from the L_i = i substitution.
Rational grassmannian_degree(int n, int k);

/// n/2 for even n, 0 for odd n.
Rational holme_gr2(int n);

/// Coefficients of (at - t - b)(at - b + 1) = A t^2 + B t + C.
struct PabQuadratic {
  Rational A, B, C;
};
PabQuadratic pab_quadratic(const Rational& a, const Rational& b);

/// lambda = (a+b) L_1 + b (L_2 + ... + L_{n-1}) on GL(n), from the sum over i.
Rational gammaab_degree(int n, int a, int b);
/// The same family as (-1)^n n (Q(a,b) - Q(b,a)) / (a - b) with
/// Q(a,b) = [P_{a,b}(t)^{n-1}]_{t^n}, divided symbolically so a = b works.
Rational gammaab_divided_difference(int n, int a, int b);

/// lambda = a L_1 + b L_2 on GL(n), a > b >= 1.
Rational abn_degree(int n, int a, int b);
/// Closed form of abn_degree(n, a, 1).
Rational tevelev_degree(int n, int a);
/// lambda = a L_1 + a L_2 on GL(n).
Rational aa_degree(int n, int a);

/// Dual of Gr_3(C^n), n >= 4, via the angle brackets.
Rational gr3_degree(int n);

/// Hyperdeterminant of format n_1 x ... x n_k (k >= 2, every n_u >= 2).
/// Above the boundary: degree 0. On the boundary: n_max! / prod (n_u - 1)!.
/// Below it the degree engine runs on GL(n_1) x ... x GL(n_k).
DegreeReport hyperdet_degree(std::vector<int> dims, std::uint64_t seed = 1,
                             const EngineOptions& opts = {});

/// Degree from whichever closed form covers lambda: a single GL(n) factor
/// with lambda, up to adding a multiple of sigma_1, of shape a L_1,
/// L_1 + ... + L_k, a L_1 + b L_2, a L_1 + a L_2 or
/// (a+b) L_1 + b (L_2 + ... + L_{n-1}); or a product of GL factors with
/// lambda = sum of the top coordinates, on or above the hyperdeterminant
/// boundary. nullopt when no formula applies.
std::optional<Rational> family_degree(const RootSystem& rs, const Weight& lambda);

}  // namespace discdeg::closed
