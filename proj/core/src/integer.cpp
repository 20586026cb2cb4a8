#include "biquad/exactmath/integer.hpp"

#include <stdexcept>

namespace biquad {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_decimal(const BigInt& n) { return n.get_str(10); }

std::string to_decimal(const BigRational& q) { return q.get_str(10); }

BigInt parse_integer(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("bad integer literal: " + text);
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("bad integer literal: " + text);
  }
  BigInt n;
  n.set_str(text[0] == '+' ? text.substr(1) : text, 10);
  return n;
}

BigInt mod_floor(const BigInt& n, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::uint64_t mod_u64(const BigInt& n, std::uint64_t m) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_fdiv_ui(n.get_mpz_t(), m);
}

BigInt pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

std::string to_fixed(const BigRational& q, unsigned digits) {
  BigInt scale = pow(BigInt(10), digits);
  BigInt scaled;
  BigInt num = q.get_num() * scale;
  mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  bool negative = scaled < 0;
  BigInt mag = negative ? BigInt(-scaled) : scaled;
  std::string s = mag.get_str(10);
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  return negative ? "-" + s : s;
}

}  // namespace biquad
