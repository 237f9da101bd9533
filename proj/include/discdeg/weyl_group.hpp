#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "discdeg/rational_matrix.hpp"
#include "discdeg/root_system.hpp"

namespace discdeg {

inline constexpr std::uint64_t kDefaultEnumerationBound = 1'000'000;

/// Element of the Weyl group, stored as a word in simple reflections together
/// with the accumulated matrix on ambient coordinates.
struct WeylElement {
  std::vector<std::size_t> word;  ///< w = s_{word[0]} s_{word[1]} ...
  RationalMatrix matrix;
  int sign = 1;  ///< determinant of the action

  Weight apply(const Weight& v) const { return Weight(matrix.apply(v.coords())); }
  /// w^{-1}(t) = w^T(t), since w is orthogonal.
  std::vector<Rational> apply_inverse(std::span<const Rational> t) const {
    return matrix.apply_transpose(t);
  }
};

/// Visits each Weyl group element exactly once. Throws BoundExceeded before
/// starting if |W| > bound.
void for_each_weyl_element(const RootSystem& rs,
                           const std::function<void(const WeylElement&)>& visit,
                           std::uint64_t bound = kDefaultEnumerationBound);
std::vector<WeylElement> weyl_elements(const RootSystem& rs,
                                       std::uint64_t bound = kDefaultEnumerationBound);

struct OrbitPoint {
  Weight weight;
  /// Image under the witness of the roots in R^- pairing negatively with the
  /// dominant weight.
  std::vector<Weight> tangent;
  WeylElement witness;
};

struct OrbitTable {
  Weight dominant;
  std::vector<OrbitPoint> points;
};

/// Orbit of a dominant weight by breadth-first closure under simple
/// reflections. Throws std::invalid_argument when lambda is not dominant and
/// BoundExceeded when the orbit grows past `bound`.
OrbitTable weyl_orbit(const RootSystem& rs, const Weight& lambda,
                      std::uint64_t bound = kDefaultEnumerationBound);

/// |W| / |W lambda|.
std::uint64_t stabilizer_order(const RootSystem& rs, const Weight& lambda,
                               std::uint64_t bound = kDefaultEnumerationBound);

}  // namespace discdeg
