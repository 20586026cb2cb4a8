#pragma once

#include "biquad/exactmath/matrix.hpp"
#include "biquad/exactmath/unipoly.hpp"

namespace biquad {

Matrix<BigInt> sylvester_matrix(const IntPoly& f, const IntPoly& g);

/// Res(f, g) as the determinant of the Sylvester matrix. Throws for zero input.
BigInt resultant(const IntPoly& f, const IntPoly& g);

/// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f). Throws std::invalid_argument when deg f < 2.
BigInt poly_discriminant(const IntPoly& f);

}  // namespace biquad
