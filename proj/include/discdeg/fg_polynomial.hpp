#pragma once

#include <cstdint>

#include "discdeg/degree_engine.hpp"
#include "discdeg/multi_poly.hpp"
#include "discdeg/root_system.hpp"

namespace discdeg {

/// Universal degree polynomial of a semisimple group, in the fundamental
/// weight coordinates y and in the shifted coordinates x = y - 1.
struct FgPolynomial {
  MultiPoly in_y;
  MultiPoly in_x;
};

/// Sums the Weyl group images of (lambda-1) prod (lambda+beta-1)/(-beta) with
/// lambda = sum y_i omega_i symbolic, at two generic points. Rejects GL
/// factors. Throws InconsistencyError if the two points disagree, a
/// coefficient is not an integer, or the degree is not |R^-|.
FgPolynomial fg_polynomial(const RootSystem& rs, std::uint64_t seed = 1,
                           const EngineOptions& opts = {});

/// (epsilon / |W_lambda|) F(y(lambda)). Requires nonnegative integral y.
DegreeReport degree_from_fg(const RootSystem& rs, const FgPolynomial& fg, const Weight& lambda);

}  // namespace discdeg
