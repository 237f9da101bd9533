#include "discdeg/reference_values.hpp"

#include <array>

namespace discdeg::reference {

namespace {

constexpr std::array kFgTable{
    FgEntry{"A1", "2x1"},
    FgEntry{"A1+A1", "6x1x2+2x2+2x1+2"},
    FgEntry{"A2", "6(x1+x2+1)(2x1x2+x1+x2+1)"},
    FgEntry{"B2",
            "20(2x2^3x1+3x2^2x1^2+x2x1^3)+12(2x2^3+12x2^2x1+11x2x1^2+x1^3)"
            "+24(3x2^2+7x2x1+2x1^2)+8(9x2+8x1)+24"},
    FgEntry{"G2",
            "42(18x2^5x1+45x2^4x1^2+40x2^3x1^3+15x2^2x1^4+2x2x1^5)"
            "+60(9x2^5+90x2^4x1+150x2^3x1^2+90x2^2x1^3+20x2x1^4+x1^5)"
            "+110(27x2^4+132x2^3x1+144x2^2x1^2+52x2x1^3+5x1^4)"
            "+8(822x2^3+2349x2^2x1+1527x2x1^2+248x1^3)"
            "+6(60x2^2+1972x2x1+579x1^2)+4(1025x2+727x1)+916"},
    FgEntry{"A1+A1+A1", "24x2x1x3+12(x2x1+x2x3+x1x3)+8(x2+x1+x3)+4"},
    FgEntry{"A1+A2",
            "60x2^2x1x3+60x2x1x3^2+36x2^2x1+36x2^2x3+144x2x1x3+36x2x3^2+36x1x3^2"
            "+24x2^2+72x2x1+96x2x3+72x1x3+24x3^2+48x2+36x1+48x3+24"},
    FgEntry{"A3",
            "420x1x3x2(x1+x2)(x2+x3)(x2+x1+x3)"
            "+300(x1^3x2^2+4x1^3x2x3+x1^3x3^2+2x1^2x2^3+15x1^2x2^2x3+12x1^2x2x3^2+x1^2x3^3"
            "+x1x2^4+12x1x2^3x3+15x1x2^2x3^2+4x1x2x3^3+x2^4x3+2x2^3x3^2+x2^2x3^3)"
            "+220(3x1^3x2+3x1^3x3+12x1^2x2^2+33x1^2x2x3+9x1^2x3^2+10x1x2^3+48x1x2^2x3"
            "+33x1x2x3^2+3x1x3^3+x2^4+10x2^3x3+12x2^2x3^2+3x2x3^3)"
            "+8(42x1^3+453x1^2x2+411x1^2x3+699x1x2^2+1566x1x2x3+411x1x3^2+164x2^3+699x2^2x3"
            "+453x2x3^2+42x3^3)"
            "+12(126x1^2+491x1x2+407x1x3+239x2^2+491x2x3+126x3^2)"
            "+16(133x1+169x2+133x3)+904"},
};

// B2: 12*11 x1^2x2 should be 12*9; G2: 6*60 x2^2 should be 6*1221
constexpr std::array kFgCorrections{
    FgCorrection{"B2", {2, 1}, 132, 108},
    FgCorrection{"G2", {0, 2}, 360, 7326},
};

const std::vector<std::vector<int>> kBracketRows{
    {1}, {-2, 1}, {1, -1, 1}, {-2, 0, 0, 1}, {1, -2, 0, 1, 1}, {-2, -1, -2, 1, 2, 1},
};

}  // namespace

std::span<const FgEntry> fg_table() { return kFgTable; }

MultiPoly parse_fg(const FgEntry& entry, std::size_t rank) {
  return MultiPoly::parse(entry.polynomial, default_names(rank));
}

std::span<const FgCorrection> fg_corrections() { return kFgCorrections; }

MultiPoly corrected_fg(const FgEntry& entry, std::size_t rank) {
  MultiPoly p = parse_fg(entry, rank);
  for (const auto& fix : kFgCorrections) {
    if (fix.group != entry.group) continue;
    Exponents exps(rank, 0);
    for (std::size_t i = 0; i < rank && i < fix.exponents.size(); ++i) exps[i] = fix.exponents[i];
    p.add_term(exps, Rational(fix.corrected - fix.printed));
  }
  return p;
}

MultiPoly fg_multiple_a1(std::size_t n) {
  // elementary symmetric polynomials by the recurrence e_k(y_1..y_m)
  std::vector<MultiPoly> e(n + 1, MultiPoly(n));
  e[0] = MultiPoly::constant(n, Rational(1));
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = m + 1; k >= 1; --k) e[k] += e[k - 1] * MultiPoly::variable(n, m);
  MultiPoly out(n);
  for (std::size_t k = 0; k <= n; ++k)
    out += Rational(-2).pow(static_cast<int>(n - k)) * factorial(static_cast<int>(k) + 1) * e[k];
  return out;
}

std::span<const std::vector<int>> angle_bracket_rows() { return kBracketRows; }

}  // namespace discdeg::reference
