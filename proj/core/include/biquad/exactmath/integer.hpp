#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace biquad {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
/// Throws std::domain_error when den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den);

std::string to_decimal(const BigInt& n);
/// "n" or "n/d".
std::string to_decimal(const BigRational& q);

/// Parses a signed decimal integer; throws std::invalid_argument on junk.
BigInt parse_integer(const std::string& text);

/// Least nonnegative residue of n modulo m (m > 0).
BigInt mod_floor(const BigInt& n, const BigInt& m);
std::uint64_t mod_u64(const BigInt& n, std::uint64_t m);

BigInt pow(const BigInt& base, unsigned long exp);

/// Decimal approximation of q with `digits` fractional digits, rounded toward
/// negative infinity. Display only.
std::string to_fixed(const BigRational& q, unsigned digits);

}  // namespace biquad
