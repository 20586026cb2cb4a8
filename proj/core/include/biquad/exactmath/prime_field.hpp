#pragma once

#include "biquad/exactmath/integer.hpp"

#include <cstdint>

namespace biquad {

/// Deterministic Miller-Rabin for 64-bit inputs (fixed witness set, exact).
bool is_prime_u64(std::uint64_t n);

/// Probabilistic for large n (BPSW + rounds inside GMP); exact below 2^64.
bool is_probable_prime(const BigInt& n);

/// Arithmetic in F_p for a prime p < 2^32, so that products fit in 64 bits.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

  /// Throws std::invalid_argument unless p is prime and below kMaxModulus.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  std::uint64_t reduce(std::int64_t a) const {
    std::int64_t r = a % static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
  }
  std::uint64_t reduce(const BigInt& a) const { return mod_u64(a, p_); }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  /// Throws std::domain_error on zero.
  std::uint64_t inv(std::uint64_t a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

/// An element of F_p carrying its modulus.
struct PrimeFieldElement {
  std::uint64_t residue = 0;
  std::uint64_t modulus = 2;

  friend bool operator==(const PrimeFieldElement&, const PrimeFieldElement&) = default;
  friend auto operator<=>(const PrimeFieldElement&, const PrimeFieldElement&) = default;
};

}  // namespace biquad
