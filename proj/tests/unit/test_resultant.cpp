#include "biquad/exactmath/resultant.hpp"

#include <doctest.h>

#include <random>

using namespace biquad;

namespace {
IntPoly from_int_roots(const std::vector<long>& roots) {
  IntPoly f{1};
  for (long r : roots) f = f * IntPoly{-r, 1};
  return f;
}
}  // namespace

TEST_CASE("resultant of split polynomials is the product of root differences") {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int i = 0; i < 60; ++i) {
    std::vector<long> a(1 + i % 4), b(1 + (i / 4) % 4);
    for (auto& x : a) x = d(rng);
    for (auto& x : b) x = d(rng);
    BigInt expected = 1;
    for (long x : a)
      for (long y : b) expected *= BigInt(x - y);
    REQUIRE(resultant(from_int_roots(a), from_int_roots(b)) == expected);
  }
}

TEST_CASE("discriminant of split polynomials") {
  std::mt19937_64 rng(52);
  std::uniform_int_distribution<long> d(-12, 12);
  for (int i = 0; i < 60; ++i) {
    std::vector<long> r(2 + i % 5);
    for (auto& x : r) x = d(rng);
    BigInt expected = 1;
    for (std::size_t j = 0; j < r.size(); ++j)
      for (std::size_t k = j + 1; k < r.size(); ++k) expected *= BigInt(r[j] - r[k]) * BigInt(r[j] - r[k]);
    const long lead = 1 + i % 3;
    IntPoly f = from_int_roots(r) * BigInt(lead);
    const std::size_t n = r.size();
    REQUIRE(poly_discriminant(f) == expected * pow(BigInt(lead), 2 * n - 2));
  }
}

TEST_CASE("quadratic discriminant and the example sextic") {
  CHECK(poly_discriminant(IntPoly{3, 5, 2}) == 25 - 24);
  CHECK(poly_discriminant(IntPoly{-2, -3, -3, 3, 2, -3, -1}) == 149743897);
  CHECK_THROWS_AS(poly_discriminant(IntPoly{1, 1}), std::invalid_argument);
}

TEST_CASE("Sylvester matrix shape") {
  auto s = sylvester_matrix(IntPoly{1, 2, 3}, IntPoly{4, 5});
  CHECK(s.rows() == 3);
  CHECK(s.cols() == 3);
}
