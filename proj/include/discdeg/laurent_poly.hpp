#pragma once

#include <map>
#include <string>
#include <vector>

#include "discdeg/multi_poly.hpp"
#include "discdeg/rational.hpp"

namespace discdeg {

/// Sparse Laurent polynomial in Q[L_1^{+-1}, ..., L_n^{+-1}].
class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  explicit LaurentPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  explicit LaurentPoly(const MultiPoly& p);

  static LaurentPoly constant(std::size_t nvars, const Rational& c);
  static LaurentPoly monomial(Exponents exps, const Rational& c = 1);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& exps, const Rational& c);
  Rational coefficient(const Exponents& exps) const;

  /// [f]_1, the coefficient of the all-zero exponent vector.
  Rational constant_term() const;
  /// f(1/L_1, ..., 1/L_n)
  LaurentPoly conjugate() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string() const;

 private:
  std::size_t nvars_;
  TermMap terms_;
};

/// [a * b]_1 without forming the product.
Rational constant_term_of_product(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace discdeg
