#pragma once

#include "biquad/exactmath/matrix.hpp"
#include "biquad/exactmath/unipoly.hpp"

namespace biquad {

inline constexpr std::size_t kMaxDeterminantDimension = 16;

/// Fraction-free (Bareiss) determinant over Q[t]. Every intermediate division
/// is exact. Throws std::invalid_argument for non-square or oversized input.
RatPoly det_poly_matrix(const Matrix<RatPoly>& m);

/// Bareiss over the integers.
BigInt det_integer(const Matrix<BigInt>& m);

/// Laplace expansion along the first row. Exponential; kept as a
/// cross-check for the elimination routes on small inputs.
RatPoly det_cofactor(const Matrix<RatPoly>& m);
BigInt det_cofactor(const Matrix<BigInt>& m);

}  // namespace biquad
