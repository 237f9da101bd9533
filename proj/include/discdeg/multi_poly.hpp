#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "discdeg/rational.hpp"

namespace discdeg {

using Exponents = std::vector<int>;

/// Graded lexicographic order: total degree first, then lexicographic with
/// variable 0 most significant.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with rational coefficients in a fixed
/// number of variables. Zero coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLex>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly monomial(Exponents exps, const Rational& c = 1);
  /// Linear form sum_i coeffs[i] * x_i + constant.
  static MultiPoly linear(std::span<const Rational> coeffs,
                          const Rational& constant = 0);

  /// Parses expressions such as "20(2x_2^3x_1+3x_2^2x_1^2)+24" using implicit
  /// multiplication. Variable names are matched after removing underscores.
  static MultiPoly parse(std::string_view text,
                         const std::vector<std::string>& names);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// c(f, x^e); zero when the monomial is absent.
  Rational coefficient(const Exponents& exps) const;
  /// Total degree, or nullopt for the zero polynomial.
  std::optional<int> total_degree() const;
  bool is_homogeneous() const;

  void add_term(const Exponents& exps, const Rational& c);

  Rational evaluate(std::span<const Rational> point) const;
  MultiPoly pow(unsigned exponent) const;

  /// Renames variable i to variable perm[i].
  MultiPoly permuted(std::span<const std::size_t> perm) const;
  /// Substitutes x_i -> images[i]; all images share one variable count.
  MultiPoly substitute(std::span<const MultiPoly> images) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Highest term first (total degree, then lexicographic).
  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const;

 private:
  std::size_t nvars_;
  TermMap terms_;
};

/// Quotient of an exact division by iterated leading-term elimination under
/// graded lex order. Throws NonExactDivision if a remainder appears.
MultiPoly exact_divide(const MultiPoly& num, const MultiPoly& den);

/// Default variable names x1..xn.
std::vector<std::string> default_names(std::size_t n, const std::string& stem = "x");

}  // namespace discdeg
