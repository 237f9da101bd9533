#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "discdeg/rational.hpp"

namespace discdeg {

/// Dense univariate polynomial in t over the rationals. Coefficient i is the
/// coefficient of t^i; trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients and no degree.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  UniPoly(const Rational& constant);  // NOLINT

  /// slope * t + intercept
  static UniPoly linear(const Rational& slope, const Rational& intercept);
  static UniPoly monomial(int power, const Rational& coefficient = 1);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<int> degree() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// [f]_{t^i}; zero outside the support, including negative i.
  Rational coeff(int i) const;
  Rational evaluate(const Rational& t) const;
  UniPoly pow(unsigned exponent) const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const UniPoly& other);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division: returns (q, r) with num = q * den + r, deg r < deg den.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den);

/// Quotient of a division that must be exact; throws NonExactDivision
/// otherwise.
UniPoly exact_divide(const UniPoly& num, const UniPoly& den);

}  // namespace discdeg
