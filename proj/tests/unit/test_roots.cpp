#include "biquad/exactmath/roots.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace biquad;

namespace {
RatPoly from_roots(const std::vector<BigRational>& roots, int complex_pairs, std::mt19937_64& rng) {
  RatPoly f{BigRational(1)};
  for (const auto& r : roots) f = f * RatPoly{-r, BigRational(1)};
  std::uniform_int_distribution<int> d(1, 9);
  for (int k = 0; k < complex_pairs; ++k) {
    const BigRational shift = d(rng) - 5;
    const BigRational c = make_rational(d(rng), d(rng));
    f = f * RatPoly{shift * shift + c, -2 * shift, BigRational(1)};
  }
  return f;
}
}  // namespace

TEST_CASE("example sextic is squarefree with two real roots") {
  RatPoly f = to_rational(IntPoly{-2, -3, -3, 3, 2, -3, -1});
  CHECK(squarefree_degree6(f));
  CHECK(sturm_count(f, std::nullopt, std::nullopt) == 2);
  auto roots = isolate_real_roots(f);
  REQUIRE(roots.size() == 2);
  // Five-decimal approximations: the root lies within 5e-6 of each.
  auto near = [](const RationalInterval& iv, long approx) {
    const BigRational a = make_rational(approx, 100000), tol = make_rational(5, 1000000);
    return iv.lo < a + tol && iv.hi > a - tol;
  };
  CHECK(near(roots[0], -326599));
  CHECK(near(roots[1], -113643));
  for (const auto& iv : roots) CHECK(iv.width() < make_rational(1, 1000000));
}

TEST_CASE("squarefree tests") {
  CHECK_FALSE(is_squarefree(RatPoly{1, 2, 1}));
  CHECK(is_squarefree(RatPoly{-1, 0, 1}));
  CHECK_FALSE(squarefree_degree6(RatPoly{1, 0, 0, 0, 0, 1}));
  CHECK(squarefree_degree6(RatPoly{1, 0, 0, 0, 0, 0, 1}));
  CHECK_FALSE(squarefree_degree6(RatPoly{1, 0, 0, 0, 1, 0, 0} * RatPoly{1}));
}

TEST_CASE("Sturm counts match constructed real roots") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> d(-30, 30);
  for (int i = 0; i < 100; ++i) {
    const int pairs = i % 4;
    std::set<BigRational> rs;
    while (rs.size() < static_cast<std::size_t>(6 - 2 * pairs)) rs.insert(make_rational(d(rng), 1 + (i % 3)));
    std::vector<BigRational> roots(rs.begin(), rs.end());
    RatPoly f = from_roots(roots, pairs, rng) * BigRational(i % 2 ? -3 : 2);
    REQUIRE(f.degree() == 6);
    REQUIRE(sturm_count(f, std::nullopt, std::nullopt) == roots.size());
    auto iv = isolate_real_roots(f);
    REQUIRE(iv.size() == roots.size());
    for (std::size_t k = 0; k < roots.size(); ++k) REQUIRE(iv[k].contains(roots[k]));
    if (!roots.empty()) REQUIRE(sturm_count(f, roots.front(), roots.back()) == roots.size() - 1);
  }
}

TEST_CASE("Sturm count rejects repeated roots") {
  CHECK_THROWS_AS(sturm_count(RatPoly{1, 2, 1}, std::nullopt, std::nullopt), std::invalid_argument);
  CHECK_THROWS_AS(isolate_real_roots(RatPoly{}), std::invalid_argument);
}

TEST_CASE("roots mod p against evaluation") {
  std::mt19937_64 rng(42);
  for (std::uint64_t p : {2ULL, 3ULL, 7ULL, 101ULL}) {
    const PrimeField F(p);
    std::uniform_int_distribution<int> d(-50, 50);
    for (int i = 0; i < 50; ++i) {
      IntPoly f{d(rng), d(rng), d(rng), d(rng), d(rng), d(rng), 1};
      FpPoly fp(F, f);
      std::vector<std::uint64_t> brute;
      for (std::uint64_t a = 0; a < p; ++a)
        if (fp.evaluate(a) == 0) brute.push_back(a);
      REQUIRE(roots_mod_p(fp) == brute);
      std::vector<std::uint64_t> rep;
      FpPoly dfp = fp.derivative();
      for (auto a : brute)
        if (dfp.evaluate(a) == 0) rep.push_back(a);
      auto got = repeated_roots_mod_p(f, p);
      REQUIRE(got.size() == rep.size());
      for (std::size_t k = 0; k < rep.size(); ++k) REQUIRE(got[k].residue == rep[k]);
    }
  }
}

TEST_CASE("repeated roots at a large prime") {
  const std::uint64_t p = 149743897;
  const BigInt a(123456789), b(5), c(77);
  IntPoly f = IntPoly{-a, 1} * IntPoly{-a, 1} * IntPoly{-b, 1} * IntPoly{-c, 1} * IntPoly{1, 0, 1};
  auto r = repeated_roots_mod_p(f, p);
  REQUIRE(r.size() == 1);
  CHECK(r[0].residue == 123456789);
  CHECK(r[0].modulus == p);
  auto sf = repeated_roots_mod_p(IntPoly{-2, -3, -3, 3, 2, -3, -1}, 1000003);
  CHECK(sf.empty());
  CHECK_THROWS_AS(repeated_roots_mod_p(IntPoly{7, 14}, 7), std::domain_error);
}

TEST_CASE("repeated root of the example sextic at its bad prime") {
  const std::uint64_t p = 149743897;
  IntPoly f{-2, -3, -3, 3, 2, -3, -1};
  auto r = repeated_roots_mod_p(f, p);
  REQUIRE(r.size() == 1);
  const PrimeField F(p);
  FpPoly fp(F, f);
  CHECK(fp.evaluate(r[0].residue) == 0);
  CHECK(fp.derivative().evaluate(r[0].residue) == 0);
}
