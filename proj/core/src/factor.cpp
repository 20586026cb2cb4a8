#include "biquad/exactmath/factor.hpp"

#include "biquad/exactmath/prime_field.hpp"

#include <algorithm>
#include <map>

namespace biquad {

UnfactoredCofactor::UnfactoredCofactor(BigInt cofactor)
    : std::runtime_error("unfactored composite cofactor " + cofactor.get_str()), cofactor_(std::move(cofactor)) {}

namespace {

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> composite(kTrialDivisionLimit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kTrialDivisionLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kTrialDivisionLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

unsigned strip(BigInt& n, const BigInt& p) {
  unsigned e = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    ++e;
  }
  return e;
}

}  // namespace

Factorization factor_with_hints(const BigInt& n, std::span<const BigInt> hints) {
  if (n == 0) throw std::invalid_argument("cannot factor zero");
  BigInt rest = abs(n);
  std::map<BigInt, unsigned> found;
  for (unsigned long p : small_primes()) {
    if (rest == 1) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) found[BigInt(p)] += strip(rest, BigInt(p));
    if (BigInt(p) * BigInt(p) > rest) break;
  }
  for (const auto& h : hints) {
    if (rest == 1) break;
    if (h < 2) continue;
    if (mpz_divisible_p(rest.get_mpz_t(), h.get_mpz_t())) {
      if (!is_probable_prime(h)) throw std::invalid_argument("hint is not prime: " + h.get_str());
      found[h] += strip(rest, h);
    }
  }
  if (rest > 1) {
    if (is_probable_prime(rest)) {
      found[rest] += 1;
    } else {
      BigInt root;
      bool split = false;
      for (unsigned long k = 2; k < 64; ++k) {
        if (mpz_root(root.get_mpz_t(), rest.get_mpz_t(), k) != 0 && is_probable_prime(root)) {
          found[root] += static_cast<unsigned>(k);
          split = true;
          break;
        }
      }
      if (!split) throw UnfactoredCofactor(rest);
    }
  }
  Factorization out;
  for (auto& [p, e] : found) out.push_back({p, e});
  return out;
}

std::vector<BigInt> prime_support(const Factorization& f) {
  std::vector<BigInt> out;
  for (const auto& pp : f) out.push_back(pp.prime);
  return out;
}

}  // namespace biquad
