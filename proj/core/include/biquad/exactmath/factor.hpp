#pragma once

#include "biquad/exactmath/integer.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace biquad {

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Sorted by prime. The sign of n is dropped.
using Factorization = std::vector<PrimePower>;

/// The cofactor left after trial division and hint primes is composite and
/// could not be split, so not every prime divisor is known.
class UnfactoredCofactor : public std::runtime_error {
 public:
  explicit UnfactoredCofactor(BigInt cofactor);
  const BigInt& cofactor() const { return cofactor_; }

 private:
  BigInt cofactor_;
};

inline constexpr unsigned long kTrialDivisionLimit = 1'000'000;

/// Trial division up to 10^6, then the hint primes, then a primality test on
/// what remains (perfect powers of a prime are recognized). Throws
/// std::invalid_argument for n == 0 and UnfactoredCofactor when a composite
/// cofactor survives.
Factorization factor_with_hints(const BigInt& n, std::span<const BigInt> hints = {});

std::vector<BigInt> prime_support(const Factorization& f);

}  // namespace biquad
