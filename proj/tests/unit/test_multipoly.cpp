#include "biquad/exactmath/multipoly.hpp"

#include <doctest.h>

#include <random>

using namespace biquad;

TEST_CASE("construction and canonical text") {
  auto t1 = MultiPoly::variable(3, 0);
  auto t2 = MultiPoly::variable(3, 1);
  auto p = t1 * t1 + BigInt(2) * t1 * t2 - MultiPoly::constant(3, 4);
  CHECK(p.total_degree() == 2);
  CHECK(p.coeff({1, 1, 0}) == 2);
  CHECK(p.coeff({0, 0, 0}) == -4);
  CHECK(p.to_string() == "t1^2 + 2*t1*t2 - 4");
  CHECK((p - p).is_zero());
  CHECK(MultiPoly(3).total_degree() == -1);
  CHECK_THROWS_AS(t1 + MultiPoly::variable(2, 0), std::invalid_argument);
}

TEST_CASE("derivative is linear and obeys the product rule") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-5, 5);
  auto random_poly = [&] {
    MultiPoly p(4);
    for (int i = 0; i < 6; ++i) {
      MultiPoly::Exponents e(4);
      for (auto& x : e) x = static_cast<unsigned>((d(rng) + 5) % 3);
      p.add_term(e, d(rng));
    }
    return p;
  };
  for (int i = 0; i < 50; ++i) {
    auto a = random_poly(), b = random_poly();
    for (std::size_t k = 0; k < 4; ++k) {
      REQUIRE((a * b).derivative(k) == a.derivative(k) * b + a * b.derivative(k));
      REQUIRE((a + b).derivative(k) == a.derivative(k) + b.derivative(k));
    }
  }
}

TEST_CASE("evaluation over Z, F_p and Z/nZ agree") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> d(-20, 20);
  MultiPoly p(3);
  p.add_term({2, 0, 1}, 3);
  p.add_term({0, 1, 1}, -7);
  p.add_term({0, 0, 0}, 11);
  const PrimeField F(101);
  for (int i = 0; i < 100; ++i) {
    std::vector<BigInt> x{d(rng), d(rng), d(rng)};
    std::vector<std::uint64_t> xr;
    for (auto& v : x) xr.push_back(F.reduce(v));
    BigInt exact = p.evaluate(x);
    REQUIRE(p.evaluate_mod(xr, F) == F.reduce(exact));
    REQUIRE(p.evaluate_mod(x, BigInt(1000)) == mod_floor(exact, 1000));
  }
}
