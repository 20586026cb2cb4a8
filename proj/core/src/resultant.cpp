#include "biquad/exactmath/resultant.hpp"

#include "biquad/exactmath/determinant.hpp"

#include <stdexcept>

namespace biquad {

Matrix<BigInt> sylvester_matrix(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("Sylvester matrix of a zero polynomial");
  const auto m = static_cast<std::size_t>(f.degree());
  const auto n = static_cast<std::size_t>(g.degree());
  Matrix<BigInt> s(m + n, m + n, BigInt(0));
  // Rows 0..n-1 carry shifted copies of f, rows n..n+m-1 of g, highest degree first.
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s(r, r + k) = f.coeff(m - k);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s(n + r, r + k) = g.coeff(n - k);
  return s;
}

BigInt resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant with a zero polynomial");
  if (f.degree() == 0 && g.degree() == 0) return 1;
  return det_integer(sylvester_matrix(f, g));
}

BigInt poly_discriminant(const IntPoly& f) {
  if (f.degree() < 2) throw std::invalid_argument("discriminant needs degree >= 2");
  const long d = f.degree();
  BigInt r = resultant(f, f.derivative());
  BigInt q;
  mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
  if ((d * (d - 1) / 2) % 2 == 1) q = -q;
  return q;
}

}  // namespace biquad
