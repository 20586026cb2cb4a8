#include "biquad/exactmath/prime_field.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace biquad {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t q : kWitnesses) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a proven deterministic set for n < 3.3 * 10^24.
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime_u64(mpz_get_ui(n.get_mpz_t()));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= kMaxModulus) throw std::invalid_argument("prime field modulus must be below 2^32: " + std::to_string(p));
  if (!is_prime_u64(p)) throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const { return powmod64(a, e, p_); }

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

}  // namespace biquad
