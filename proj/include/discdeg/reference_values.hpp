#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "discdeg/multi_poly.hpp"
#include "discdeg/rational.hpp"

namespace discdeg::reference {

/// Published universal degree polynomials in the shifted basis x_i = y_i - 1.
struct FgEntry {
  std::string_view group;
  std::string_view polynomial;
};
std::span<const FgEntry> fg_table();
/// Parses an FgEntry polynomial in the variables x1..x_rank.
MultiPoly parse_fg(const FgEntry& entry, std::size_t rank);

/// Printed coefficients that disagree with every independent evaluation
/// (orbit sums at integer points, classical degrees). Exponents are in x1, x2.
struct FgCorrection {
  std::string_view group;
  std::array<int, 2> exponents;
  long printed;
  long corrected;
};
std::span<const FgCorrection> fg_corrections();
/// parse_fg with the corrections for the entry's group applied.
MultiPoly corrected_fg(const FgEntry& entry, std::size_t rank);

/// sum_{k=0}^{n} (-2)^{n-k} (k+1)! sigma_k(y_1..y_n) for the group n A_1,
/// in the y basis.
MultiPoly fg_multiple_a1(std::size_t n);

/// Rows n = 0..5 of the printed angle-bracket table, k = 0..n.
std::span<const std::vector<int>> angle_bracket_rows();

}  // namespace discdeg::reference
