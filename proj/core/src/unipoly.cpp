#include "biquad/exactmath/unipoly.hpp"

#include <sstream>

namespace biquad {

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<BigRational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {RatPoly{}, a};
  std::vector<BigRational> quo(static_cast<std::size_t>(a.degree() - db + 1), BigRational(0));
  const BigRational& lb = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    BigRational factor = rem[static_cast<std::size_t>(k)] / lb;
    if (factor == 0) continue;
    quo[static_cast<std::size_t>(k - db)] = factor;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -= factor * b.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly divide_exact(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * BigRational(1 / a.leading());
}

BigInt content(const IntPoly& f) {
  BigInt g = 0;
  for (const auto& c : f.coefficients()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  return g;
}

IntPoly primitive_part(const IntPoly& f) {
  BigInt g = content(f);
  if (g == 0 || g == 1) return f;
  std::vector<BigInt> c;
  for (const auto& x : f.coefficients()) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    c.push_back(q);
  }
  return IntPoly(std::move(c));
}

RatPoly to_rational(const IntPoly& f) {
  std::vector<BigRational> c;
  for (const auto& x : f.coefficients()) c.emplace_back(x);
  return RatPoly(std::move(c));
}

IntPoly to_integer(const RatPoly& f) {
  std::vector<BigInt> c;
  for (const auto& x : f.coefficients()) {
    if (x.get_den() != 1) throw std::domain_error("non-integral coefficient " + x.get_str());
    c.push_back(x.get_num());
  }
  return IntPoly(std::move(c));
}

IntPoly clear_denominators(const RatPoly& f) {
  BigInt l = 1;
  for (const auto& x : f.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<BigInt> c;
  for (const auto& x : f.coefficients()) c.push_back(BigInt(x.get_num() * (l / x.get_den())));
  return primitive_part(IntPoly(std::move(c)));
}

IntPoly reversed(const IntPoly& f, std::size_t n) {
  std::vector<BigInt> c(n + 1, BigInt(0));
  for (std::size_t k = 0; k <= n; ++k) c[n - k] = f.coeff(k);
  return IntPoly(std::move(c));
}

namespace {

template <class T>
std::string render(const UniPoly<T>& f, char var) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = f.degree(); k >= 0; --k) {
    T c = f.coeff(static_cast<std::size_t>(k));
    if (c == 0) continue;
    bool negative = c < 0;
    T mag = negative ? T(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) out << mag.get_str();
    if (k >= 1) out << var;
    if (k >= 2) out << '^' << k;
  }
  return out.str();
}

}  // namespace

std::string to_string(const IntPoly& f, char var) { return render(f, var); }
std::string to_string(const RatPoly& f, char var) { return render(f, var); }

}  // namespace biquad
