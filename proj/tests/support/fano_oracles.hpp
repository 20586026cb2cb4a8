#pragma once

#include "biquad/fano.hpp"

#include <doctest.h>

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace biquad::testing {

/// A binary quadratic form over F_p vanishing at all p + 1 points of P^1 is
/// zero, so this decides membership in F1(X_p) without the chart equations.
inline bool line_on_x(const PencilOfQuadrics& pencil, const GrassmannChart& c,
                      std::span<const std::uint64_t> coords, std::uint64_t p) {
  const PrimeField F(p);
  auto on_x = [&](std::uint64_t r, std::uint64_t s) {
    auto pt = line_point(c, coords, r, s, F);
    std::span<const std::uint64_t, kVariables> v(pt);
    return evaluate_form(pencil.q1(), v, F) == 0 && evaluate_form(pencil.q2(), v, F) == 0;
  };
  if (!on_x(0, 1)) return false;
  for (std::uint64_t s = 0; s < p; ++s)
    if (!on_x(1, s)) return false;
  return true;
}

/// Jacobian of the chart system by exact central differences over Z (every
/// equation has degree <= 2), reduced mod p afterwards.
inline FpMatrix central_difference_jacobian(const FanoSystem& s, std::span<const std::uint64_t> coords,
                                            std::uint64_t p) {
  FpMatrix jac(kFanoEquations, kChartParameters, 0);
  std::vector<BigInt> x(coords.begin(), coords.end());
  for (std::size_t j = 0; j < kChartParameters; ++j) {
    auto plus = x, minus = x;
    plus[j] += 1;
    minus[j] -= 1;
    for (std::size_t i = 0; i < kFanoEquations; ++i) {
      BigInt diff = s.equations[i].evaluate(plus) - s.equations[i].evaluate(minus);
      REQUIRE(mod_floor(diff, 2) == 0);
      jac(i, j) = mod_u64(BigInt(diff / 2), p);
    }
  }
  return jac;
}

}  // namespace biquad::testing
