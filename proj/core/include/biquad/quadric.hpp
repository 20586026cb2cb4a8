#pragma once

#include "biquad/exactmath/integer.hpp"
#include "biquad/exactmath/matrix.hpp"
#include "biquad/exactmath/multipoly.hpp"
#include "biquad/exactmath/prime_field.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>

namespace biquad {

inline constexpr std::size_t kVariables = 6;
inline constexpr std::size_t kMonomials = 21;
/// Coordinate order on P^5 used for every vector and matrix.
inline constexpr std::array<char, kVariables> kVariableNames{'u', 'v', 'w', 'x', 'y', 'z'};

/// Position of the monomial x_i x_j (i <= j) in the packed coefficient array,
/// ordered uu, uv, uw, ..., uz, vv, vw, ..., zz.
constexpr std::size_t monomial_index(std::size_t i, std::size_t j) {
  if (i > j) return monomial_index(j, i);
  return i * kVariables - i * (i - 1) / 2 + (j - i);
}

/// An integral quadratic form in u, v, w, x, y, z.
class QuadraticForm {
 public:
  using Coefficients = std::array<BigInt, kMonomials>;

  /// Throws std::invalid_argument if every coefficient is zero.
  explicit QuadraticForm(Coefficients coeffs);

  /// Sum of the six squares.
  static QuadraticForm sum_of_squares();

  /// Coefficient of x_i x_j (order of i, j irrelevant).
  const BigInt& coeff(std::size_t i, std::size_t j) const { return c_[monomial_index(i, j)]; }
  const Coefficients& coefficients() const { return c_; }

  /// Canonical text: monomials in packed order, e.g. "uv + uw - 4vw + x^2".
  std::string to_string() const;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  Coefficients c_;
};

/// Symmetric M with M_ii = coeff(x_i^2), M_ij = coeff(x_i x_j) / 2, so q(v) = v^T M v.
Matrix<BigRational> gram_matrix(const QuadraticForm& q);

/// q(v) straight from the integer coefficients.
BigInt evaluate_form(const QuadraticForm& q, std::span<const BigInt, kVariables> v);
BigRational evaluate_form(const QuadraticForm& q, std::span<const BigRational, kVariables> v);
std::uint64_t evaluate_form(const QuadraticForm& q, std::span<const std::uint64_t, kVariables> v,
                            const PrimeField& field);

/// Partial derivatives of q at v, from the integer coefficients; valid in every characteristic.
std::array<BigInt, kVariables> gradient_at(const QuadraticForm& q, std::span<const BigInt, kVariables> v);
std::array<BigRational, kVariables> gradient_at(const QuadraticForm& q, std::span<const BigRational, kVariables> v);
std::array<std::uint64_t, kVariables> gradient_at(const QuadraticForm& q, std::span<const std::uint64_t, kVariables> v,
                                                  const PrimeField& field);

/// Coefficients of r^2, rs, s^2 in q(r * row_a + s * row_b).
struct LineRestriction {
  MultiPoly rr;
  MultiPoly rs;
  MultiPoly ss;
};

using SymbolicRow = std::array<MultiPoly, kVariables>;

/// Throws std::invalid_argument if the rows use different parameter arities.
LineRestriction restrict_to_line(const QuadraticForm& q, const SymbolicRow& row_a, const SymbolicRow& row_b);

}  // namespace biquad
