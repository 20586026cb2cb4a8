#include "biquad/exactmath/fp_poly.hpp"

#include <doctest.h>

#include <random>

using namespace biquad;

namespace {
FpPoly random_fp(std::mt19937_64& rng, const PrimeField& F, int degree) {
  std::uniform_int_distribution<std::uint64_t> d(0, F.modulus() - 1);
  std::vector<std::uint64_t> c;
  for (int k = 0; k <= degree; ++k) c.push_back(d(rng));
  if (c.back() == 0) c.back() = 1;
  return FpPoly(F, c);
}
}  // namespace

TEST_CASE("reduction of integer polynomials") {
  const PrimeField F(3);
  FpPoly f(F, IntPoly{-2, -3, -3, 3, 2, -3, -1});
  CHECK(f.coefficients() == std::vector<std::uint64_t>{1, 0, 0, 0, 2, 0, 2});
  CHECK(FpPoly(F, IntPoly{3, 6, 9}).is_zero());
  CHECK(f.monic().leading() == 1);
}

TEST_CASE("division and gcd over F_p") {
  std::mt19937_64 rng(5);
  for (std::uint64_t p : {2ULL, 7ULL, 149743897ULL}) {
    const PrimeField F(p);
    for (int i = 0; i < 100; ++i) {
      FpPoly a = random_fp(rng, F, 1 + i % 8);
      FpPoly b = random_fp(rng, F, 1 + i % 4);
      auto [q, r] = divmod(a, b);
      REQUIRE(q * b + r == a);
      REQUIRE(r.degree() < b.degree());
      FpPoly c = random_fp(rng, F, 1 + i % 2);
      FpPoly g = gcd(a * c, b * c);
      REQUIRE(g.leading() == 1);
      REQUIRE(divmod(a * c, g).second.is_zero());
      REQUIRE(divmod(g, c.monic()).second.is_zero());
    }
  }
}

TEST_CASE("powmod agrees with repeated multiplication") {
  const PrimeField F(13);
  std::mt19937_64 rng(9);
  FpPoly m = random_fp(rng, F, 5);
  FpPoly b = random_fp(rng, F, 3);
  FpPoly acc(F, std::vector<std::uint64_t>{1});
  for (std::uint64_t e = 0; e < 40; ++e) {
    REQUIRE(powmod(b, e, m) == divmod(acc, m).second);
    acc = divmod(acc * b, m).second;
  }
  FpPoly x = FpPoly::monomial(F, 1, 1);
  CHECK(powmod(x, 13, m) == divmod(FpPoly::monomial(F, 1, 13), m).second);
}

TEST_CASE("evaluation and derivative") {
  const PrimeField F(5);
  FpPoly f(F, std::vector<std::uint64_t>{1, 2, 3});
  CHECK(f.evaluate(2) == (1 + 4 + 12) % 5);
  CHECK(f.derivative() == FpPoly(F, std::vector<std::uint64_t>{2, 1}));
  CHECK(FpPoly(F, std::vector<std::uint64_t>{1, 0, 0, 0, 0, 1}).derivative() == FpPoly(F));
}
