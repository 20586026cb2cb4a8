#pragma once

#include "biquad/pencil.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace biquad {

/// A quadratic form with coefficients reduced into F_p (packed monomial order).
struct ReducedForm {
  std::array<std::uint64_t, kMonomials> coeffs{};
  bool degenerate = false;
  std::string to_string() const;
};

struct ReducedPencil {
  std::uint64_t prime = 0;
  ReducedForm q1;
  ReducedForm q2;
  bool degenerate() const { return q1.degenerate || q2.degenerate; }
};

/// Coefficient-wise reduction; a form vanishing mod p is flagged degenerate.
ReducedPencil reduce_pencil(const PencilOfQuadrics& p, std::uint64_t prime);

using ProjectivePoint = std::array<std::uint64_t, kVariables>;

/// Scales v so that its first nonzero coordinate is 1. Throws for the zero vector.
ProjectivePoint normalize_projective(ProjectivePoint v, const PrimeField& field);

enum class LocusMethod { kernel_guided, exhaustive };
std::string_view to_string(LocusMethod m);

struct SingularLocusReport {
  std::uint64_t prime = 0;
  /// Normalized, sorted, distinct.
  std::vector<ProjectivePoint> points;
  /// Rank of the 2x6 Jacobian of (Q1, Q2) at each point.
  std::vector<std::size_t> ranks;
  LocusMethod method = LocusMethod::kernel_guided;
  bool conical = false;
};

inline constexpr std::uint64_t kExhaustiveLocusMaxPrime = 13;
inline constexpr std::uint64_t kKernelCandidateCap = 1'000'000;

/// Points of X_p where the Jacobian of (Q1, Q2) has rank <= 1, for odd p.
/// kernel_guided: vertices of the singular members M1 - t0 M2 at the repeated
/// roots t0 of f mod p (and of M2 when f drops degree by >= 2), intersected with X_p.
/// exhaustive: scan of P^5(F_p), allowed for p <= 13.
/// Throws std::invalid_argument for p = 2, a degenerate reduction, forms that
/// are not certified to define a complete intersection, or a disallowed method.
SingularLocusReport singular_locus(const PencilOfQuadrics& p, std::uint64_t prime,
                                   LocusMethod method = LocusMethod::kernel_guided, unsigned threads = 1);

/// True (non-conical) iff no singular point has Jacobian rank 0.
bool cone_check(const SingularLocusReport& r);

/// Linear forms over F_2 are 6-bit masks (bit k = coefficient of variable k);
/// quadratic forms over F_2 are 21-bit masks in packed monomial order.
using F2Linear = std::uint8_t;
using F2Quadratic = std::uint32_t;

F2Quadratic product_mod2(F2Linear a, F2Linear b);
std::string linear_to_string(F2Linear l);
std::string quadratic_to_string(F2Quadratic q);

struct Mod2FormReport {
  std::string name;
  F2Quadratic form = 0;
  /// Unordered pairs (a, b), a <= b, with a * b == form.
  std::vector<std::pair<F2Linear, F2Linear>> factorizations;
  /// l with l^2 == form.
  std::optional<F2Linear> square_of;

  bool has_linear_factor() const { return !factorizations.empty(); }
};

/// Exhaustive search over all 63 * 64 / 2 products of nonzero linear forms.
Mod2FormReport analyze_form_mod2(std::string name, F2Quadratic form);
F2Quadratic reduce_form_mod2(const QuadraticForm& q);

/// On the hyperplane factor = 0 of one form, the other form restricts to the
/// square of a linear form: a non-reduced component.
struct NonReducedComponent {
  std::string factored_form;
  F2Linear hyperplane = 0;
  std::string other_form;
  F2Linear square_root = 0;
};

struct Mod2Report {
  Mod2FormReport q1;
  Mod2FormReport q2;
  std::vector<NonReducedComponent> non_reduced;
  bool reducible = false;
  /// "reducible and non-reduced", "reducible", "non-reduced evidence" or "irreducible over F2".
  std::string verdict;
};

Mod2Report mod2_degeneracy(const PencilOfQuadrics& p);
/// The same analysis for raw F_2 forms.
Mod2Report mod2_degeneracy(F2Quadratic q1, F2Quadratic q2);

}  // namespace biquad
