#pragma once

#include "biquad/exactmath/roots.hpp"
#include "biquad/quadric.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace biquad {

/// The pencil spanned by two integral quadratic forms. The characteristic form
/// f(t) = -det(M1 - t M2) is computed once, at construction.
class PencilOfQuadrics {
 public:
  PencilOfQuadrics(QuadraticForm q1, QuadraticForm q2);

  const QuadraticForm& q1() const { return q1_; }
  const QuadraticForm& q2() const { return q2_; }
  const Matrix<BigRational>& m1() const { return m1_; }
  const Matrix<BigRational>& m2() const { return m2_; }
  const IntPoly& char_form() const { return char_form_; }

 private:
  QuadraticForm q1_;
  QuadraticForm q2_;
  Matrix<BigRational> m1_;
  Matrix<BigRational> m2_;
  IntPoly char_form_;
};

/// -det(M1 - t M2) for arbitrary Gram matrices, with the integrality of the
/// result asserted. Throws std::logic_error("non-integral characteristic form").
IntPoly characteristic_form(const Matrix<BigRational>& m1, const Matrix<BigRational>& m2);
inline const IntPoly& characteristic_form(const PencilOfQuadrics& p) { return p.char_form(); }

enum class Smoothness { smooth, singular, degenerate };
std::string_view to_string(Smoothness s);

/// smooth iff f has degree 6 and six distinct roots; degenerate iff f ≡ 0.
Smoothness smoothness_check(const PencilOfQuadrics& p);

/// Same criterion applied to f mod p (p odd). Degree drop counts as singular.
Smoothness smoothness_mod_p(const PencilOfQuadrics& p, std::uint64_t prime);

/// Data of the genus-2 curve z^2 = f(t).
struct CurveData {
  IntPoly f;
  /// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f).
  BigInt poly_disc;
  /// Discriminant of the model z^2 = f(t): 2^12 * disc(f).
  BigInt disc;
  /// Primes dividing disc * lc(f), increasing.
  std::vector<BigInt> bad_primes;
  std::size_t real_weierstrass_count = 0;
  std::vector<RationalInterval> real_roots;
};

inline constexpr unsigned kGenus2DiscriminantTwoPower = 12;

/// Requires smoothness_check(p) == smooth (std::invalid_argument otherwise).
/// Propagates UnfactoredCofactor when the discriminant cannot be fully factored.
CurveData curve_data(const PencilOfQuadrics& p, std::span<const BigInt> hint_primes = {});

}  // namespace biquad
