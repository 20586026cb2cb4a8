#pragma once

#include "biquad/exactmath/matrix.hpp"
#include "biquad/exactmath/prime_field.hpp"

#include <cstdint>
#include <vector>

namespace biquad {

using FpMatrix = Matrix<std::uint64_t>;
using FpVector = std::vector<std::uint64_t>;

/// Rank over F_p; entries must already be reduced. Works for every prime, including 2.
std::size_t rank_mod_p(FpMatrix m, const PrimeField& field);

/// Reduced row echelon form in place; returns pivot columns in increasing order.
std::vector<std::size_t> row_reduce_mod_p(FpMatrix& m, const PrimeField& field);

/// Null-space basis of m over F_p for odd p. One vector per free column, in
/// increasing column order, with a 1 in that free column. Throws
/// std::invalid_argument for p = 2: Gram matrices are undefined in characteristic 2.
std::vector<FpVector> kernel_mod_p(const FpMatrix& m, const PrimeField& field);

FpVector multiply_mod_p(const FpMatrix& m, const FpVector& v, const PrimeField& field);

}  // namespace biquad
