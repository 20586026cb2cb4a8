#include "biquad/exactmath/determinant.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace biquad;

namespace {
template <class T>
T leibniz(const Matrix<T>& m, const T& zero, const T& one) {
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  T total = zero;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    T term = one;
    for (std::size_t i = 0; i < perm.size(); ++i) term = term * m(i, perm[i]);
    if (inversions % 2) {
      total = total - term;
    } else {
      total = total + term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Matrix<BigInt> random_int_matrix(std::mt19937_64& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Matrix<BigInt> m(n, n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

Matrix<RatPoly> random_poly_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-4, 4);
  Matrix<RatPoly> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = RatPoly{BigRational(d(rng)), make_rational(d(rng), 2)};
  return m;
}
}  // namespace

TEST_CASE("integer determinants against the permutation expansion") {
  const BigInt Z(0), O(1);
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    auto m = random_int_matrix(rng, 1 + i % 6, 9);
    REQUIRE(det_integer(m) == leibniz(m, Z, O));
    REQUIRE(det_cofactor(m) == leibniz(m, Z, O));
  }
}

TEST_CASE("polynomial determinants against the permutation expansion") {
  const RatPoly Z, O{BigRational(1)};
  std::mt19937_64 rng(22);
  for (int i = 0; i < 40; ++i) {
    auto m = random_poly_matrix(rng, 1 + i % 5);
    REQUIRE(det_poly_matrix(m) == leibniz(m, Z, O));
  }
}

TEST_CASE("pivoting through zero leading entries") {
  Matrix<BigInt> m(3, 3, std::vector<BigInt>{0, 1, 2, 1, 0, 3, 4, -3, 8});
  CHECK(det_integer(m) == -2);
  Matrix<BigInt> singular(3, 3, std::vector<BigInt>{1, 2, 3, 2, 4, 6, 0, 1, 1});
  CHECK(det_integer(singular) == 0);
  Matrix<RatPoly> diag = Matrix<RatPoly>::identity(2, RatPoly{}, RatPoly{1});
  diag(0, 0) = RatPoly{};
  diag(0, 1) = RatPoly{0, 1};
  diag(1, 0) = RatPoly{0, 1};
  CHECK(det_poly_matrix(diag) == RatPoly{0, 0, -1});
}

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(det_integer(Matrix<BigInt>(2, 3, BigInt(0))), std::invalid_argument);
  CHECK_THROWS_AS(det_integer(Matrix<BigInt>(kMaxDeterminantDimension + 1, kMaxDeterminantDimension + 1, BigInt(0))),
                  std::invalid_argument);
  CHECK(det_integer(Matrix<BigInt>(0, 0)) == 1);
}

TEST_CASE("multiplicativity on larger integer matrices") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    auto a = random_int_matrix(rng, 8, 50);
    auto b = random_int_matrix(rng, 8, 50);
    REQUIRE(det_integer(a * b) == det_integer(a) * det_integer(b));
  }
}
