#pragma once

#include <span>
#include <string>
#include <vector>

#include "discdeg/rational.hpp"

namespace discdeg {

/// Small dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Rational> apply(std::span<const Rational> v) const;
  /// M^T v
  std::vector<Rational> apply_transpose(std::span<const Rational> v) const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  Rational determinant() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

/// Solves A x = b for square nonsingular A; throws std::domain_error when A
/// is singular.
std::vector<Rational> solve_linear(RationalMatrix a, std::vector<Rational> b);

}  // namespace discdeg
