#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "discdeg/rational.hpp"
#include "discdeg/rational_matrix.hpp"

namespace discdeg {

/// Exact vector in the ambient coordinates L_1, ..., L_d of a root system.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Weight zero(std::size_t dim) { return Weight(std::vector<Rational>(dim)); }
  /// The coordinate functional L_{index+1}.
  static Weight unit(std::size_t dim, std::size_t index);

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& c, Weight w);
  Weight operator-() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.coords_ <=> b.coords_; }

  std::string to_string() const;

 private:
  std::vector<Rational> coords_;
};

/// W-invariant Euclidean form on ambient coordinates.
Rational dot(const Weight& a, const Weight& b);
/// Value of the linear functional `w` at the point `t`.
Rational evaluate(const Weight& w, std::span<const Rational> t);

enum class FactorKind { A, B, C, D, G2, GL };

struct FactorSpec {
  FactorKind kind;
  /// Rank for A/B/C/D/G2; the matrix size n for GL(n).
  int rank;
};

struct Factor {
  FactorKind kind;
  int rank;
  std::size_t offset;  ///< first ambient coordinate of this factor
  std::size_t dim;     ///< number of ambient coordinates
  std::size_t first_simple;
  std::size_t num_simple;

  bool semisimple() const { return kind != FactorKind::GL; }
  std::string label() const;
  std::uint64_t weyl_order() const;
  std::size_t negative_root_count() const;
};

enum class PairingSign { negative, zero, positive };

/// Root data for a product of simple factors of types A, B, C, D, G2 and
/// reductive GL(n) factors, each living on its own block of ambient
/// coordinates. Simple roots follow Stembridge's convention (type A:
/// alpha_i = L_{i+1} - L_i; B_n: L_1, L_i - L_{i-1}; C_n: 2L_1, ...; D_n:
/// L_1 + L_2, ...; G2: L_2 - L_1, L_1 - 2L_2 + L_3). Immutable once built.
class RootSystem {
 public:
  static RootSystem build(std::span<const FactorSpec> factors);
  static RootSystem build(std::initializer_list<FactorSpec> factors) {
    return build(std::span<const FactorSpec>(factors.begin(), factors.size()));
  }

  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return simple_roots_.size(); }
  bool is_semisimple() const;
  std::string label() const;

  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const std::vector<Weight>& negative_roots() const { return negative_roots_; }
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  /// For semisimple factors these lie in the factor's root span; for GL(n)
  /// factors they are the integral weights L_{i+1} + ... + L_n.
  const std::vector<Weight>& fundamental_weights() const { return fundamental_weights_; }
  /// Matrix of the simple reflection s_i on ambient coordinates.
  const RationalMatrix& simple_reflection(std::size_t i) const { return reflections_[i]; }

  std::uint64_t weyl_order() const;

  PairingSign pairing_sign(const Weight& beta, const Weight& lambda) const;
  Weight reflect(const Weight& v, const Weight& alpha) const;

  /// y_i = 2 (lambda, alpha_i) / (alpha_i, alpha_i)
  std::vector<Rational> fundamental_coordinates(const Weight& lambda) const;
  Weight from_fundamental(std::span<const Rational> y) const;

  bool is_dominant(const Weight& lambda) const;
  /// Dominant element of the Weyl orbit, plus whether lambda had to move.
  std::pair<Weight, bool> dominant_representative(const Weight& lambda) const;
  /// Integral y-coordinates and integral coordinates on every GL block.
  bool is_integral(const Weight& lambda) const;
  /// Drops the central component on A and G2 blocks (their ambient space is
  /// larger than the root span); identity on B/C/D and GL blocks.
  Weight project_to_root_span(const Weight& lambda) const;

  /// Appends a GL(1) factor carrying no roots (central augmentation).
  RootSystem with_central_factor() const;

 private:
  RootSystem() = default;

  std::vector<Factor> factors_;
  std::size_t ambient_dim_ = 0;
  std::vector<Weight> simple_roots_;
  std::vector<Weight> negative_roots_;
  std::vector<Weight> positive_roots_;
  std::vector<Weight> fundamental_weights_;
  std::vector<RationalMatrix> reflections_;
};

}  // namespace discdeg
