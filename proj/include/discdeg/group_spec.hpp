#pragma once

#include <string_view>
#include <vector>

#include "discdeg/root_system.hpp"

namespace discdeg {

/// Parses group specifications such as "A2", "G2", "A1+A2", "GL4" or
/// "GL2xGL2xGL3". Factors are joined by '+' or 'x'. Throws ParseError with
/// the offending character position.
std::vector<FactorSpec> parse_group_spec(std::string_view text);
RootSystem parse_group(std::string_view text);

/// Parses "L:a1,a2,..." (ambient coordinates) or "w:y1,y2,..." (fundamental
/// weight coordinates). Entries are integers or fractions p/q. Throws
/// ParseError with the offending character position.
Weight parse_weight(const RootSystem& rs, std::string_view text);

}  // namespace discdeg
