#include "discdeg/gl_symfun.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "discdeg/errors.hpp"

namespace discdeg::gl {

std::size_t Blocks::total() const { return std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}); }

std::size_t Blocks::offset(std::size_t block) const {
  return std::accumulate(sizes.begin(), sizes.begin() + static_cast<std::ptrdiff_t>(block), std::size_t{0});
}

namespace {

int permutation_sign(std::span<const std::size_t> p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

void permute_blocks(const Blocks& blocks, std::size_t block, std::vector<std::size_t>& perm, int sign,
                    const std::function<void(std::span<const std::size_t>, int)>& visit) {
  if (block == blocks.sizes.size()) {
    visit(perm, sign);
    return;
  }
  const std::size_t off = blocks.offset(block);
  const auto first = perm.begin() + static_cast<std::ptrdiff_t>(off);
  const auto last = first + static_cast<std::ptrdiff_t>(blocks.sizes[block]);
  std::sort(first, last);
  do {
    const int s = permutation_sign(std::span<const std::size_t>(perm.data() + off, blocks.sizes[block]));
    permute_blocks(blocks, block + 1, perm, sign * s, visit);
  } while (std::next_permutation(first, last));
}

void check_shape(const Blocks& blocks, std::span<const Rational> coeffs) {
  if (blocks.sizes.empty() || std::find(blocks.sizes.begin(), blocks.sizes.end(), 0) != blocks.sizes.end())
    throw std::invalid_argument("GL blocks must be nonempty");
  if (coeffs.size() != blocks.total())
    throw std::invalid_argument("weight has " + std::to_string(coeffs.size()) +
                                " coordinates, expected " + std::to_string(blocks.total()));
}

Rational block_sum(const Blocks& blocks, std::span<const Rational> coeffs, std::size_t block) {
  Rational s(0);
  const std::size_t off = blocks.offset(block);
  for (std::size_t i = 0; i < blocks.sizes[block]; ++i) s += coeffs[off + i];
  return s;
}

MultiPoly block_sigma1(const Blocks& blocks, std::size_t block) {
  std::vector<Rational> c(blocks.total());
  const std::size_t off = blocks.offset(block);
  for (std::size_t i = 0; i < blocks.sizes[block]; ++i) c[off + i] = Rational(1);
  return MultiPoly::linear(c);
}

Rational symmetry_factor(const Symmetry& s) {
  return Rational(s.epsilon) / Rational(static_cast<long long>(s.stabilizer_order));
}

}  // namespace

void for_each_permutation(const Blocks& blocks,
                          const std::function<void(std::span<const std::size_t>, int)>& visit) {
  std::vector<std::size_t> perm(blocks.total());
  std::iota(perm.begin(), perm.end(), 0);
  permute_blocks(blocks, 0, perm, 1, visit);
}

std::vector<Rational> dominant_form(const Blocks& blocks, std::span<const Rational> coeffs) {
  check_shape(blocks, coeffs);
  std::vector<Rational> out(coeffs.begin(), coeffs.end());
  for (std::size_t b = 0; b < blocks.sizes.size(); ++b) {
    const auto first = out.begin() + static_cast<std::ptrdiff_t>(blocks.offset(b));
    std::sort(first, first + static_cast<std::ptrdiff_t>(blocks.sizes[b]), std::greater<>());
  }
  return out;
}

Symmetry symmetry_of(const Blocks& blocks, std::span<const Rational> coeffs) {
  check_shape(blocks, coeffs);
  Symmetry s;
  std::size_t zero_pairs = 0;
  for (std::size_t b = 0; b < blocks.sizes.size(); ++b) {
    std::map<Rational, std::uint64_t> multiplicity;
    const std::size_t off = blocks.offset(b);
    for (std::size_t i = 0; i < blocks.sizes[b]; ++i) ++multiplicity[coeffs[off + i]];
    for (const auto& [value, m] : multiplicity) {
      zero_pairs += m * (m - 1) / 2;
      for (std::uint64_t k = 2; k <= m; ++k) s.stabilizer_order *= k;
    }
  }
  s.epsilon = zero_pairs % 2 == 0 ? 1 : -1;
  return s;
}

MultiPoly lambda_plus(const Blocks& blocks, std::span<const Rational> coeffs, std::size_t max_vars) {
  check_shape(blocks, coeffs);
  if (blocks.total() > max_vars)
    throw BoundExceeded("lambda^+ expansion limited to " + std::to_string(max_vars) + " variables");
  const std::size_t n = blocks.total();
  const MultiPoly lam = MultiPoly::linear(coeffs);
  MultiPoly out = lam;
  for (std::size_t b = 0; b < blocks.sizes.size(); ++b) {
    const std::size_t off = blocks.offset(b);
    for (std::size_t i = 0; i < blocks.sizes[b]; ++i)
      for (std::size_t j = 0; j < i; ++j)
        out = out * (lam + MultiPoly::variable(n, off + i) - MultiPoly::variable(n, off + j));
  }
  return out;
}

MultiPoly vandermonde(const Blocks& blocks) {
  const std::size_t n = blocks.total();
  MultiPoly out = MultiPoly::constant(n, Rational(1));
  for (std::size_t b = 0; b < blocks.sizes.size(); ++b) {
    const std::size_t off = blocks.offset(b);
    for (std::size_t i = 0; i < blocks.sizes[b]; ++i)
      for (std::size_t j = i + 1; j < blocks.sizes[b]; ++j)
        out = out * (MultiPoly::variable(n, off + i) - MultiPoly::variable(n, off + j));
  }
  return out;
}

MultiPoly antisymmetrize(const MultiPoly& f, const Blocks& blocks) {
  if (f.nvars() != blocks.total()) throw std::invalid_argument("antisymmetrize: variable count mismatch");
  MultiPoly out(f.nvars());
  Exponents moved(f.nvars());
  for_each_permutation(blocks, [&](std::span<const std::size_t> perm, int sign) {
    for (const auto& [e, c] : f.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) moved[perm[i]] = e[i];
      out.add_term(moved, sign > 0 ? c : -c);
    }
  });
  return out;
}

MultiPoly jacobi_symmetrize(const MultiPoly& f, const Blocks& blocks) {
  return exact_divide(antisymmetrize(f, blocks), vandermonde(blocks));
}

MultiPoly class_via_jacobi(const Blocks& blocks, std::span<const Rational> coeffs) {
  const auto a = dominant_form(blocks, coeffs);
  const MultiPoly cls = symmetry_factor(symmetry_of(blocks, a)) * jacobi_symmetrize(lambda_plus(blocks, a), blocks) *
                        Rational(-1);
  MultiPoly expected(blocks.total());
  for (std::size_t b = 0; b < blocks.sizes.size(); ++b) {
    Exponents e(blocks.total(), 0);
    e[blocks.offset(b)] = 1;
    expected += cls.coefficient(e) * block_sigma1(blocks, b);
  }
  if (expected != cls)
    throw InconsistencyError("Jacobi class is not a combination of block sums: " + cls.to_string());
  return cls;
}

Rational nu_permanent(const MultiPoly& f, const ExponentVector& nu, const Blocks& blocks) {
  if (nu.size() != f.nvars() || blocks.total() != f.nvars())
    throw std::invalid_argument("nu_permanent: exponent vector length mismatch");
  Rational acc(0);
  Exponents moved(nu.size());
  for_each_permutation(blocks, [&](std::span<const std::size_t> perm, int sign) {
    for (std::size_t i = 0; i < nu.size(); ++i) moved[perm[i]] = nu[i];
    const Rational c = f.coefficient(moved);
    if (sign > 0) acc += c;
    else acc -= c;
  });
  return acc;
}

ExponentVector sigma_pattern(std::size_t n) {
  ExponentVector mu = staircase(n);
  if (!mu.empty()) mu[0] += 1;
  return mu;
}

ExponentVector staircase(std::size_t n) {
  ExponentVector d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<int>(n - 1 - i);
  return d;
}

std::vector<Rational> class_via_permanent(const Blocks& blocks, std::span<const Rational> coeffs) {
  const auto a = dominant_form(blocks, coeffs);
  const MultiPoly plus = lambda_plus(blocks, a);
  const Rational factor = -symmetry_factor(symmetry_of(blocks, a));
  std::vector<Rational> out;
  for (std::size_t u = 0; u < blocks.sizes.size(); ++u) {
    ExponentVector nu;
    for (std::size_t v = 0; v < blocks.sizes.size(); ++v) {
      const auto part = v == u ? sigma_pattern(blocks.sizes[v]) : staircase(blocks.sizes[v]);
      nu.insert(nu.end(), part.begin(), part.end());
    }
    out.push_back(factor * nu_permanent(plus, nu, blocks));
  }
  return out;
}

namespace {

// prod_{i != j} (1 - L_i / L_j), cached per n
const LaurentPoly& root_kernel(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, LaurentPoly> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  LaurentPoly k = LaurentPoly::constant(n, Rational(1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Exponents e(n, 0);
      e[i] = 1;
      e[j] = -1;
      LaurentPoly factor = LaurentPoly::constant(n, Rational(1));
      factor.add_term(e, Rational(-1));
      k = k * factor;
    }
  return cache.emplace(n, std::move(k)).first->second;
}

}  // namespace

Rational scalar_product(const MultiPoly& f, const MultiPoly& g) {
  if (f.nvars() != g.nvars()) throw std::invalid_argument("scalar_product: variable count mismatch");
  const std::size_t n = f.nvars();
  const LaurentPoly weighted = LaurentPoly(g).conjugate() * root_kernel(n);
  return constant_term_of_product(LaurentPoly(f), weighted) / factorial(static_cast<int>(n));
}

Rational degree_from_block_class(const Blocks& blocks, std::span<const Rational> coeffs,
                                 std::span<const Rational> block_class) {
  check_shape(blocks, coeffs);
  for (std::size_t b = 0; b < blocks.sizes.size(); ++b) {
    const Rational s = block_sum(blocks, coeffs, b);
    if (s.is_zero()) continue;
    return -block_class[b] * Rational(static_cast<long long>(blocks.sizes[b])) / s;
  }
  throw std::invalid_argument("every block of the weight has coordinate sum 0");
}

Rational degree_via_jacobi(const Blocks& blocks, std::span<const Rational> coeffs) {
  const MultiPoly cls = class_via_jacobi(blocks, coeffs);
  std::vector<Rational> per_block;
  for (std::size_t b = 0; b < blocks.sizes.size(); ++b) {
    Exponents e(blocks.total(), 0);
    e[blocks.offset(b)] = 1;
    per_block.push_back(cls.coefficient(e));
  }
  return degree_from_block_class(blocks, coeffs, per_block);
}

Rational degree_via_permanent(const Blocks& blocks, std::span<const Rational> coeffs) {
  return degree_from_block_class(blocks, coeffs, class_via_permanent(blocks, coeffs));
}

Rational degree_via_scalar_product(std::size_t n, std::span<const Rational> coeffs) {
  const Blocks blocks = Blocks::single(n);
  const auto a = dominant_form(blocks, coeffs);
  const Rational size = block_sum(blocks, a, 0);
  if (size.is_zero()) throw std::invalid_argument("scalar-product route needs |lambda| != 0");
  const MultiPoly target = block_sigma1(blocks, 0) * vandermonde(blocks);
  const Rational pairing = scalar_product(lambda_plus(blocks, a), target);
  const int nn = static_cast<int>(n);
  return symmetry_factor(symmetry_of(blocks, a)) / size * factorial(nn) / double_factorial_odd(nn - 1) *
         pairing;
}

}  // namespace discdeg::gl
