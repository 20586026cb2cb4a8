#pragma once

#include "biquad/exactmath/integer.hpp"
#include "biquad/exactmath/prime_field.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace biquad {

/// Sparse polynomial with integer coefficients in a fixed number of variables.
/// Zero coefficients are never stored and every exponent vector has length arity().
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;
  using TermMap = std::map<Exponents, BigInt>;

  explicit MultiPoly(std::size_t arity = 0) : arity_(arity) {}

  static MultiPoly constant(std::size_t arity, const BigInt& c);
  /// The k-th variable, 0-based.
  static MultiPoly variable(std::size_t arity, std::size_t k);

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  /// -1 for the zero polynomial.
  int total_degree() const;
  BigInt coeff(const Exponents& e) const;

  void add_term(const Exponents& e, const BigInt& c);

  MultiPoly derivative(std::size_t k) const;

  BigInt evaluate(std::span<const BigInt> x) const;
  std::uint64_t evaluate_mod(std::span<const std::uint64_t> x, const PrimeField& field) const;
  /// Evaluation with arithmetic modulo an arbitrary positive integer.
  BigInt evaluate_mod(std::span<const BigInt> x, const BigInt& modulus) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const BigInt& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const BigInt& c) { return a *= c; }
  friend MultiPoly operator*(const BigInt& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  /// Terms in decreasing lexicographic exponent order, e.g. "t1*t5 + t1 - 2".
  std::string to_string(std::span<const std::string> names) const;
  /// Variables rendered as t1, t2, ...
  std::string to_string() const;

 private:
  void check_arity(const MultiPoly& o) const;
  std::size_t arity_;
  TermMap terms_;
};

}  // namespace biquad
