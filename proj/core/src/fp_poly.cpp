#include "biquad/exactmath/fp_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace biquad {

FpPoly::FpPoly(PrimeField field, std::vector<std::uint64_t> coeffs) : field_(field), c_(std::move(coeffs)) {
  for (auto& x : c_) x %= field_.modulus();
  trim();
}

FpPoly::FpPoly(PrimeField field, const IntPoly& f) : field_(field) {
  for (const auto& x : f.coefficients()) c_.push_back(field_.reduce(x));
  trim();
}

FpPoly FpPoly::monomial(PrimeField field, std::uint64_t a, std::size_t k) {
  std::vector<std::uint64_t> c(k + 1, 0);
  c[k] = a;
  return FpPoly(field, std::move(c));
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t FpPoly::evaluate(std::uint64_t x) const {
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
  return acc;
}

FpPoly FpPoly::derivative() const {
  std::vector<std::uint64_t> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(field_.mul(c_[k], k % field_.modulus()));
  return FpPoly(field_, std::move(d));
}

FpPoly FpPoly::monic() const {
  if (c_.empty()) return *this;
  std::uint64_t li = field_.inv(c_.back());
  std::vector<std::uint64_t> d;
  for (auto x : c_) d.push_back(field_.mul(x, li));
  return FpPoly(field_, std::move(d));
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  const PrimeField& F = a.field_;
  std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = F.add(a.coeff(k), b.coeff(k));
  return FpPoly(F, std::move(r));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  const PrimeField& F = a.field_;
  std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = F.sub(a.coeff(k), b.coeff(k));
  return FpPoly(F, std::move(r));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  const PrimeField& F = a.field_;
  if (a.is_zero() || b.is_zero()) return FpPoly(F);
  std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a.c_[i], b.c_[j]));
  }
  return FpPoly(F, std::move(r));
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero over F_p");
  const PrimeField& F = a.field();
  if (a.degree() < b.degree()) return {FpPoly(F), a};
  std::vector<std::uint64_t> rem = a.coefficients();
  std::vector<std::uint64_t> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
  const std::uint64_t lead_inv = F.inv(b.leading());
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = rem.size(); k-- > db;) {
    std::uint64_t factor = F.mul(rem[k], lead_inv);
    if (factor == 0) continue;
    quo[k - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = F.sub(rem[k - db + j], F.mul(factor, b.coeff(j)));
  }
  return {FpPoly(F, std::move(quo)), FpPoly(F, std::move(rem))};
}

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m) {
  FpPoly result = divmod(FpPoly(base.field(), std::vector<std::uint64_t>{1}), m).second;
  FpPoly b = divmod(base, m).second;
  while (e) {
    if (e & 1) result = divmod(result * b, m).second;
    b = divmod(b * b, m).second;
    e >>= 1;
  }
  return result;
}

}  // namespace biquad
