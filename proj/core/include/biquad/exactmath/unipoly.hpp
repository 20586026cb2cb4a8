#pragma once

#include "biquad/exactmath/integer.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace biquad {

/// Dense univariate polynomial, coefficients lowest degree first.
/// T is BigInt or BigRational. The coefficient vector never has trailing zeros,
/// so the zero polynomial is the empty vector.
template <class T>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static UniPoly constant(const T& a) { return UniPoly(std::vector<T>{a}); }
  /// a * t^k
  static UniPoly monomial(const T& a, std::size_t k) {
    std::vector<T> c(k + 1, T(0));
    c[k] = a;
    return UniPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<T>& coefficients() const { return c_; }
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  const T& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  template <class R>
  R evaluate(const R& x) const {
    R acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + R(*it);
    return acc;
  }

  UniPoly derivative() const {
    std::vector<T> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * T(static_cast<long>(k)));
    return UniPoly(std::move(d));
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  UniPoly& operator*=(const T& a) {
    for (auto& x : c_) x *= a;
    trim();
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) { return a *= T(-1); }
  friend UniPoly operator*(UniPoly a, const T& s) { return a *= s; }
  friend UniPoly operator*(const T& s, UniPoly a) { return a *= s; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPoly = UniPoly<BigInt>;
using RatPoly = UniPoly<BigRational>;

/// Quotient and remainder over Q. Throws std::domain_error on division by zero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// Quotient when b divides a exactly; throws std::logic_error otherwise.
RatPoly divide_exact(const RatPoly& a, const RatPoly& b);

/// Monic gcd over Q; gcd(0, 0) = 0.
RatPoly gcd(RatPoly a, RatPoly b);

/// Positive gcd of the coefficients; 0 for the zero polynomial.
BigInt content(const IntPoly& f);
/// f / content(f). Sign is preserved.
IntPoly primitive_part(const IntPoly& f);

RatPoly to_rational(const IntPoly& f);
/// Throws std::domain_error if some coefficient is not an integer.
IntPoly to_integer(const RatPoly& f);
/// Positive scalar multiple of f with coprime integer coefficients.
IntPoly clear_denominators(const RatPoly& f);

/// t^n f(1/t) for n = max(deg f, 0) unless `n` is given explicitly.
IntPoly reversed(const IntPoly& f, std::size_t n);

std::string to_string(const IntPoly& f, char var = 't');
std::string to_string(const RatPoly& f, char var = 't');

}  // namespace biquad
