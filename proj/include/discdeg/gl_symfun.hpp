#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "discdeg/laurent_poly.hpp"
#include "discdeg/multi_poly.hpp"
#include "discdeg/rational.hpp"

// Symmetric-function routes for GL(n) and products GL(n_1) x ... x GL(n_k).
//
// Inside this namespace a weight is a coefficient vector a with
// lambda = sum a_i L_i. Within each block the negative roots are L_i - L_j
// for i > j, so the dominant ordering is non-increasing; inputs in any order
// are sorted first (the degree is invariant under the Weyl group).
namespace discdeg::gl {

inline constexpr std::size_t kDefaultVariableBound = 6;

/// Sizes of the GL blocks; variables are numbered consecutively.
struct Blocks {
  std::vector<std::size_t> sizes;

  static Blocks single(std::size_t n) { return Blocks{{n}}; }
  std::size_t total() const;
  std::size_t offset(std::size_t block) const;
};

using ExponentVector = std::vector<int>;

/// Calls visit(perm, sign) for every element of S_{n_1} x ... x S_{n_k},
/// acting on variable indices block by block.
void for_each_permutation(const Blocks& blocks,
                          const std::function<void(std::span<const std::size_t>, int)>& visit);

/// Sorts each block non-increasing.
std::vector<Rational> dominant_form(const Blocks& blocks, std::span<const Rational> coeffs);

/// epsilon = (-1)^{#zero-pairing negative roots} and |W_lambda| for a weight.
struct Symmetry {
  int epsilon = 1;
  std::uint64_t stabilizer_order = 1;
};
Symmetry symmetry_of(const Blocks& blocks, std::span<const Rational> coeffs);

/// lambda * prod_{beta in R^-} (lambda + beta). Throws BoundExceeded above
/// `max_vars` variables.
MultiPoly lambda_plus(const Blocks& blocks, std::span<const Rational> coeffs,
                      std::size_t max_vars = kDefaultVariableBound);

/// prod over blocks of prod_{i<j} (L_i - L_j).
MultiPoly vandermonde(const Blocks& blocks);
MultiPoly antisymmetrize(const MultiPoly& f, const Blocks& blocks);
/// Antisymmetrization divided exactly by the Vandermonde product.
MultiPoly jacobi_symmetrize(const MultiPoly& f, const Blocks& blocks);
inline MultiPoly jacobi_symmetrize(const MultiPoly& f) {
  return jacobi_symmetrize(f, Blocks::single(f.nvars()));
}

/// -(epsilon / |W_lambda|) J(lambda^+). Throws InconsistencyError if it is
/// not a combination of the block sums sigma_1^{(u)}.
MultiPoly class_via_jacobi(const Blocks& blocks, std::span<const Rational> coeffs);

/// sum_w sgn(w) c(f, L^{w(nu)}) over the block permutation group.
Rational nu_permanent(const MultiPoly& f, const ExponentVector& nu, const Blocks& blocks);
inline Rational nu_permanent(const MultiPoly& f, const ExponentVector& nu) {
  return nu_permanent(f, nu, Blocks::single(f.nvars()));
}

/// (n, n-2, n-3, ..., 1, 0)
ExponentVector sigma_pattern(std::size_t n);
/// (n-1, n-2, ..., 1, 0)
ExponentVector staircase(std::size_t n);

/// Coefficient of sigma_1^{(u)} in the class, one entry per block, from
/// nu-permanents of lambda^+.
std::vector<Rational> class_via_permanent(const Blocks& blocks, std::span<const Rational> coeffs);

/// (1/n!) [f conj(g) prod_{i != j} (1 - L_i/L_j)]_1
Rational scalar_product(const MultiPoly& f, const MultiPoly& g);

/// Degree from the block coefficients: -c_k n_k / |lambda_(k)| for the first
/// block with nonzero coefficient sum. Throws std::invalid_argument when all
/// block sums vanish.
Rational degree_from_block_class(const Blocks& blocks, std::span<const Rational> coeffs,
                                 std::span<const Rational> block_class);

Rational degree_via_jacobi(const Blocks& blocks, std::span<const Rational> coeffs);
Rational degree_via_permanent(const Blocks& blocks, std::span<const Rational> coeffs);
/// Single GL(n) only; requires |lambda| != 0.
Rational degree_via_scalar_product(std::size_t n, std::span<const Rational> coeffs);

}  // namespace discdeg::gl
