#pragma once

#include "biquad/exactmath/fp_poly.hpp"
#include "biquad/exactmath/unipoly.hpp"

#include <optional>
#include <vector>

namespace biquad {

/// deg f == 6 and gcd(f, f') is a nonzero constant.
bool squarefree_degree6(const RatPoly& f);

bool is_squarefree(const RatPoly& f);

/// Half-open interval (lo, hi] with rational endpoints.
struct RationalInterval {
  BigRational lo;
  BigRational hi;

  bool contains(const BigRational& x) const { return lo < x && x <= hi; }
  BigRational width() const { return hi - lo; }
  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

/// Sturm chain of a squarefree f: f, f', then negated remainders, each scaled
/// to a primitive integer polynomial by a positive factor.
std::vector<IntPoly> sturm_chain(const RatPoly& f);

/// Number of distinct real roots in (lo, hi]; nullopt stands for -inf / +inf.
/// Throws std::invalid_argument unless f is nonzero and squarefree.
std::size_t sturm_count(const RatPoly& f, const std::optional<BigRational>& lo, const std::optional<BigRational>& hi);

/// One interval per real root, in increasing order, each narrower than
/// `max_width`. Throws std::invalid_argument unless f is nonzero and squarefree.
std::vector<RationalInterval> isolate_real_roots(const RatPoly& f,
                                                 const BigRational& max_width = BigRational(1, 1000000));

/// Distinct roots in F_p of a nonzero polynomial, in increasing order.
/// Exhaustive evaluation below 2^16; above that, gcd with t^p - t followed by
/// deterministic splitting gcd(h, (t + a)^((p-1)/2) - 1) for a = 0, 1, 2, ...
std::vector<std::uint64_t> roots_mod_p(const FpPoly& f);

/// Roots in F_p of gcd(f mod p, f' mod p). Throws std::domain_error when f ≡ 0 mod p.
std::vector<PrimeFieldElement> repeated_roots_mod_p(const IntPoly& f, std::uint64_t p);

}  // namespace biquad
