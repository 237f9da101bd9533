#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "discdeg/rational.hpp"
#include "discdeg/root_system.hpp"
#include "discdeg/weyl_group.hpp"

namespace discdeg {

/// Partition of the negative roots by their pairing with a dominant weight.
struct TangentData {
  std::vector<Weight> tangent;  ///< pairing < 0
  std::vector<Weight> zero;     ///< pairing = 0
  int epsilon = 1;              ///< (-1)^{|zero|}
  std::uint64_t stabilizer_order = 1;
};

/// Requires lambda dominant. The stabilizer order is computed from the
/// parabolic subgroup generated by the simple reflections fixing lambda.
TangentData tangent_data(const RootSystem& rs, const Weight& lambda);

struct GenericPoint {
  std::vector<Rational> coords;
  std::uint64_t seed = 0;
};

/// Integer point in [-10^6, 10^6]^d drawn from a PRNG seeded with `seed`,
/// redrawn until no root vanishes on it and the weights in `distinct` take
/// pairwise distinct values. Throws NonGenericPoint if the redraw budget runs
/// out.
GenericPoint pick_generic_point(const RootSystem& rs, std::uint64_t seed,
                                std::span<const Weight> distinct = {});

enum class Method { orbit, symmetric, fg, closed_form, permanent, jacobi, scalar_product };

std::string_view to_string(Method m);
/// Accepts the CLI spellings: orbit, symmetric, fg, closed-form, permanent,
/// jacobi, scalar. Throws std::invalid_argument otherwise.
Method parse_method(std::string_view name);

struct DegreeReport {
  Rational degree;  ///< always a nonnegative integer
  bool is_hypersurface = false;
  int epsilon = 1;
  std::uint64_t stabilizer_order = 1;
  std::vector<GenericPoint> points_used;
  Method method = Method::orbit;
};

struct EngineOptions {
  unsigned jobs = 1;
  std::uint64_t bound = kDefaultEnumerationBound;
};

/// E(t,u) = -sum over the orbit of (mu(t)+u) prod_{beta in T_mu} (mu(t)+beta(t)+u)/(-beta(t)).
/// Throws NonGenericPoint if some beta(t) vanishes.
Rational class_sum_orbit(const OrbitTable& orbit, std::span<const Rational> t, const Rational& u,
                         const EngineOptions& opts = {});
Rational class_sum_orbit(const RootSystem& rs, const Weight& lambda, std::span<const Rational> t,
                         const Rational& u, const EngineOptions& opts = {});

/// The same class from the sum over the whole Weyl group, corrected by
/// epsilon / |W_lambda|.
Rational class_sum_symmetric(const RootSystem& rs, const Weight& lambda,
                             std::span<const Rational> t, const Rational& u,
                             const EngineOptions& opts = {});

/// Degree via the orbit sum: -(E(t,1) - E(t,0)) at two generic points.
DegreeReport degree(const RootSystem& rs, const Weight& lambda, std::uint64_t seed,
                    const EngineOptions& opts = {});
/// Degree via the full Weyl group sum.
DegreeReport degree_symmetric(const RootSystem& rs, const Weight& lambda, std::uint64_t seed,
                              const EngineOptions& opts = {});

/// The class as a linear form: E(t,u) = sum_i coords[i] t_i + u_coefficient * u.
struct LinearClass {
  std::vector<Rational> coords;
  Rational u_coefficient;
};

/// Recovers the linear form from d+1 generic samples and confirms it at an
/// extra sample.
LinearClass equivariant_class(const RootSystem& rs, const Weight& lambda, std::uint64_t seed,
                              const EngineOptions& opts = {});

/// For a single GL(n) factor: checks that lambda, lambda + a*sigma_1 and the
/// dual weight with coordinates a - lambda_{n+1-i} all have the same degree.
bool weight_shift_check(const RootSystem& rs, const Weight& lambda, int a, std::uint64_t seed,
                        const EngineOptions& opts = {});

/// Canonical engine input: lambda with A and G2 blocks projected to the root
/// span. Throws std::invalid_argument if lambda is zero there, not dominant,
/// or not integral.
Weight normalize_weight(const RootSystem& rs, const Weight& lambda);

}  // namespace discdeg
