#include "biquad/exactmath/determinant.hpp"

namespace biquad {

namespace {

void check_shape(std::size_t rows, std::size_t cols) {
  if (rows != cols) throw std::invalid_argument("determinant of a non-square matrix");
  if (rows > kMaxDeterminantDimension) throw std::invalid_argument("determinant dimension exceeds 16");
}

template <class T, class ExactDiv>
T bareiss(Matrix<T> a, const T& one, ExactDiv div) {
  const std::size_t n = a.rows();
  if (n == 0) return one;
  T sign = one;
  T prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == T()) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == T()) ++swap;
      if (swap == n) return T();
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = div(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      }
      a(i, k) = T();
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

template <class T>
T cofactor(const Matrix<T>& m, const T& one) {
  const std::size_t n = m.rows();
  if (n == 0) return one;
  if (n == 1) return m(0, 0);
  T acc = T();
  for (std::size_t col = 0; col < n; ++col) {
    if (m(0, col) == T()) continue;
    Matrix<T> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t jj = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == col) continue;
        minor(i - 1, jj++) = m(i, j);
      }
    }
    T term = m(0, col) * cofactor(minor, one);
    if (col % 2 == 0) {
      acc = acc + term;
    } else {
      acc = acc - term;
    }
  }
  return acc;
}

}  // namespace

RatPoly det_poly_matrix(const Matrix<RatPoly>& m) {
  check_shape(m.rows(), m.cols());
  return bareiss(m, RatPoly::constant(BigRational(1)),
                 [](const RatPoly& a, const RatPoly& b) { return divide_exact(a, b); });
}

BigInt det_integer(const Matrix<BigInt>& m) {
  check_shape(m.rows(), m.cols());
  return bareiss(m, BigInt(1), [](const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  });
}

RatPoly det_cofactor(const Matrix<RatPoly>& m) {
  check_shape(m.rows(), m.cols());
  return cofactor(m, RatPoly::constant(BigRational(1)));
}

BigInt det_cofactor(const Matrix<BigInt>& m) {
  check_shape(m.rows(), m.cols());
  return cofactor(m, BigInt(1));
}

}  // namespace biquad
