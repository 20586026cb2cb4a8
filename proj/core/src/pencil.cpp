#include "biquad/pencil.hpp"

#include "biquad/exactmath/determinant.hpp"
#include "biquad/exactmath/factor.hpp"
#include "biquad/exactmath/resultant.hpp"

#include <algorithm>
#include <stdexcept>

namespace biquad {

IntPoly characteristic_form(const Matrix<BigRational>& m1, const Matrix<BigRational>& m2) {
  if (m1.rows() != m2.rows() || m1.cols() != m2.cols()) throw std::invalid_argument("Gram matrix shape mismatch");
  Matrix<RatPoly> pencil(m1.rows(), m1.cols());
  for (std::size_t i = 0; i < m1.rows(); ++i)
    for (std::size_t j = 0; j < m1.cols(); ++j) pencil(i, j) = RatPoly{m1(i, j), BigRational(-m2(i, j))};
  RatPoly f = -det_poly_matrix(pencil);
  try {
    return to_integer(f);
  } catch (const std::domain_error&) {
    throw std::logic_error("non-integral characteristic form");
  }
}

PencilOfQuadrics::PencilOfQuadrics(QuadraticForm q1, QuadraticForm q2)
    : q1_(std::move(q1)),
      q2_(std::move(q2)),
      m1_(gram_matrix(q1_)),
      m2_(gram_matrix(q2_)),
      char_form_(characteristic_form(m1_, m2_)) {}

std::string_view to_string(Smoothness s) {
  switch (s) {
    case Smoothness::smooth:
      return "smooth";
    case Smoothness::singular:
      return "singular";
    case Smoothness::degenerate:
      return "degenerate";
  }
  return "unknown";
}

Smoothness smoothness_check(const PencilOfQuadrics& p) {
  const IntPoly& f = p.char_form();
  if (f.is_zero()) return Smoothness::degenerate;
  return squarefree_degree6(to_rational(f)) ? Smoothness::smooth : Smoothness::singular;
}

Smoothness smoothness_mod_p(const PencilOfQuadrics& p, std::uint64_t prime) {
  const PrimeField F(prime);
  const FpPoly f(F, p.char_form());
  if (f.is_zero()) return Smoothness::degenerate;
  if (f.degree() != 6) return Smoothness::singular;
  return gcd(f, f.derivative()).degree() == 0 ? Smoothness::smooth : Smoothness::singular;
}

CurveData curve_data(const PencilOfQuadrics& p, std::span<const BigInt> hint_primes) {
  if (smoothness_check(p) != Smoothness::smooth) throw std::invalid_argument("curve data requires a smooth pencil");
  CurveData cd;
  cd.f = p.char_form();
  cd.poly_disc = poly_discriminant(cd.f);
  cd.disc = pow(BigInt(2), kGenus2DiscriminantTwoPower) * cd.poly_disc;
  cd.bad_primes = prime_support(factor_with_hints(BigInt(cd.disc * cd.f.leading()), hint_primes));
  const RatPoly fq = to_rational(cd.f);
  cd.real_weierstrass_count = sturm_count(fq, std::nullopt, std::nullopt);
  cd.real_roots = isolate_real_roots(fq);
  return cd;
}

}  // namespace biquad
