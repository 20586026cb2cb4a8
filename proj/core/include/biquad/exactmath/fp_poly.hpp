#pragma once

#include "biquad/exactmath/prime_field.hpp"
#include "biquad/exactmath/unipoly.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace biquad {

/// Dense polynomial over F_p, coefficients lowest degree first, no trailing zeros.
class FpPoly {
 public:
  explicit FpPoly(PrimeField field) : field_(field) {}
  FpPoly(PrimeField field, std::vector<std::uint64_t> coeffs);
  /// Coefficient-wise reduction of an integer polynomial.
  FpPoly(PrimeField field, const IntPoly& f);

  static FpPoly monomial(PrimeField field, std::uint64_t a, std::size_t k);

  const PrimeField& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<std::uint64_t>& coefficients() const { return c_; }
  std::uint64_t coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
  std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }

  std::uint64_t evaluate(std::uint64_t x) const;
  FpPoly derivative() const;
  FpPoly monic() const;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

 private:
  void trim();
  PrimeField field_;
  std::vector<std::uint64_t> c_;
};

/// Throws std::domain_error when b is zero.
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
FpPoly gcd(FpPoly a, FpPoly b);
/// base^e mod m by square-and-multiply.
FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m);

}  // namespace biquad
