#include "discdeg/fg_polynomial.hpp"

#include <stdexcept>

#include "discdeg/errors.hpp"
#include "discdeg/weyl_group.hpp"

namespace discdeg {

namespace {

MultiPoly fg_at(const RootSystem& rs, const std::vector<WeylElement>& elements,
                std::span<const Rational> t) {
  const std::size_t r = rs.rank();
  const auto& omegas = rs.fundamental_weights();
  MultiPoly total(r);
  for (const auto& w : elements) {
    const auto moved = w.apply_inverse(t);
    std::vector<Rational> slope(r);
    for (std::size_t i = 0; i < r; ++i) slope[i] = evaluate(omegas[i], moved);
    MultiPoly term = MultiPoly::linear(slope, Rational(-1));
    Rational den(1);
    for (const auto& beta : rs.negative_roots()) {
      const Rational b = evaluate(beta, moved);
      if (b.is_zero()) throw NonGenericPoint("a root vanishes at the evaluation point");
      term = term * MultiPoly::linear(slope, b - Rational(1));
      den *= -b;
    }
    total -= term * (Rational(1) / den);
  }
  return total;
}

}  // namespace

FgPolynomial fg_polynomial(const RootSystem& rs, std::uint64_t seed, const EngineOptions& opts) {
  for (const auto& f : rs.factors())
    if (f.kind == FactorKind::GL)
      throw std::invalid_argument("F_G is defined for semisimple groups; use the A" +
                                  std::to_string(f.rank - 1) + " part of GL" +
                                  std::to_string(f.rank));
  const auto elements = weyl_elements(rs, opts.bound);
  const MultiPoly first = fg_at(rs, elements, pick_generic_point(rs, seed).coords);
  const MultiPoly second = fg_at(rs, elements, pick_generic_point(rs, seed + 1).coords);
  if (first != second)
    throw InconsistencyError("F_G differs between two generic points for " + rs.label());
  for (const auto& [e, c] : first.terms())
    if (!c.is_integer()) throw InconsistencyError("F_G has non-integral coefficient " + c.to_string());
  const auto deg = first.total_degree();
  if (!deg || static_cast<std::size_t>(*deg) != rs.negative_roots().size())
    throw InconsistencyError("F_G does not have degree |R^-| for " + rs.label());

  const std::size_t r = rs.rank();
  std::vector<MultiPoly> shift;
  for (std::size_t i = 0; i < r; ++i)
    shift.push_back(MultiPoly::variable(r, i) + MultiPoly::constant(r, Rational(1)));
  return {first, first.substitute(shift)};
}

DegreeReport degree_from_fg(const RootSystem& rs, const FgPolynomial& fg, const Weight& lambda) {
  const Weight lam = normalize_weight(rs, lambda);
  const auto y = rs.fundamental_coordinates(lam);
  for (const auto& c : y)
    if (!c.is_integer() || c.sign() < 0)
      throw std::invalid_argument("fundamental-weight coordinates must be nonnegative integers");
  const TangentData td = tangent_data(rs, lam);
  const Rational value = Rational(td.epsilon) / Rational(static_cast<long long>(td.stabilizer_order)) *
                         fg.in_y.evaluate(y);
  if (!value.is_integer() || value.sign() < 0)
    throw InconsistencyError("F_G gives a non-integral or negative degree " + value.to_string());
  DegreeReport report;
  report.degree = value;
  report.is_hypersurface = !value.is_zero();
  report.epsilon = td.epsilon;
  report.stabilizer_order = td.stabilizer_order;
  report.method = Method::fg;
  return report;
}

}  // namespace discdeg
