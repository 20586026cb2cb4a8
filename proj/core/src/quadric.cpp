#include "biquad/quadric.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace biquad {

QuadraticForm::QuadraticForm(Coefficients coeffs) : c_(std::move(coeffs)) {
  if (std::all_of(c_.begin(), c_.end(), [](const BigInt& c) { return c == 0; }))
    throw std::invalid_argument("quadratic form has no nonzero coefficient");
}

QuadraticForm QuadraticForm::sum_of_squares() {
  Coefficients c;
  for (auto& x : c) x = 0;
  for (std::size_t i = 0; i < kVariables; ++i) c[monomial_index(i, i)] = 1;
  return QuadraticForm(std::move(c));
}

std::string QuadraticForm::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < kVariables; ++i) {
    for (std::size_t j = i; j < kVariables; ++j) {
      const BigInt& c = coeff(i, j);
      if (c == 0) continue;
      const bool negative = c < 0;
      if (first) {
        if (negative) out << "-";
      } else {
        out << (negative ? " - " : " + ");
      }
      first = false;
      BigInt mag = abs(c);
      if (mag != 1) out << mag.get_str();
      if (i == j) {
        out << kVariableNames[i] << "^2";
      } else {
        out << kVariableNames[i] << kVariableNames[j];
      }
    }
  }
  return out.str();
}

Matrix<BigRational> gram_matrix(const QuadraticForm& q) {
  Matrix<BigRational> m(kVariables, kVariables, BigRational(0));
  for (std::size_t i = 0; i < kVariables; ++i) {
    m(i, i) = q.coeff(i, i);
    for (std::size_t j = i + 1; j < kVariables; ++j) {
      m(i, j) = make_rational(q.coeff(i, j), 2);
      m(j, i) = m(i, j);
    }
  }
  return m;
}

namespace {

template <class R>
R evaluate_generic(const QuadraticForm& q, std::span<const R, kVariables> v) {
  R acc = 0;
  for (std::size_t i = 0; i < kVariables; ++i)
    for (std::size_t j = i; j < kVariables; ++j) {
      if (q.coeff(i, j) == 0) continue;
      acc += R(q.coeff(i, j)) * v[i] * v[j];
    }
  return acc;
}

template <class R>
std::array<R, kVariables> gradient_generic(const QuadraticForm& q, std::span<const R, kVariables> v) {
  std::array<R, kVariables> g;
  for (std::size_t k = 0; k < kVariables; ++k) {
    R acc = R(q.coeff(k, k)) * 2 * v[k];
    for (std::size_t j = 0; j < kVariables; ++j) {
      if (j != k) acc += R(q.coeff(k, j)) * v[j];
    }
    g[k] = acc;
  }
  return g;
}

}  // namespace

BigInt evaluate_form(const QuadraticForm& q, std::span<const BigInt, kVariables> v) { return evaluate_generic(q, v); }

BigRational evaluate_form(const QuadraticForm& q, std::span<const BigRational, kVariables> v) {
  return evaluate_generic(q, v);
}

std::uint64_t evaluate_form(const QuadraticForm& q, std::span<const std::uint64_t, kVariables> v,
                            const PrimeField& F) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < kVariables; ++i)
    for (std::size_t j = i; j < kVariables; ++j) {
      std::uint64_t c = F.reduce(q.coeff(i, j));
      if (c == 0) continue;
      acc = F.add(acc, F.mul(c, F.mul(v[i] % F.modulus(), v[j] % F.modulus())));
    }
  return acc;
}

std::array<BigInt, kVariables> gradient_at(const QuadraticForm& q, std::span<const BigInt, kVariables> v) {
  return gradient_generic(q, v);
}

std::array<BigRational, kVariables> gradient_at(const QuadraticForm& q, std::span<const BigRational, kVariables> v) {
  return gradient_generic(q, v);
}

std::array<std::uint64_t, kVariables> gradient_at(const QuadraticForm& q, std::span<const std::uint64_t, kVariables> v,
                                                  const PrimeField& F) {
  std::array<std::uint64_t, kVariables> g{};
  for (std::size_t k = 0; k < kVariables; ++k) {
    std::uint64_t acc = F.mul(F.reduce(q.coeff(k, k)), F.mul(2 % F.modulus(), v[k] % F.modulus()));
    for (std::size_t j = 0; j < kVariables; ++j) {
      if (j != k) acc = F.add(acc, F.mul(F.reduce(q.coeff(k, j)), v[j] % F.modulus()));
    }
    g[k] = acc;
  }
  return g;
}

LineRestriction restrict_to_line(const QuadraticForm& q, const SymbolicRow& a, const SymbolicRow& b) {
  const std::size_t arity = a[0].arity();
  for (std::size_t k = 0; k < kVariables; ++k) {
    if (a[k].arity() != arity || b[k].arity() != arity)
      throw std::invalid_argument("line rows have mismatched parameter arity");
  }
  // q(r a + s b) = r^2 q(a) + rs B(a, b) + s^2 q(b), where the polar form B
  // collects c_ij (a_i b_j + a_j b_i) over i < j and 2 c_ii a_i b_i.
  LineRestriction out{MultiPoly(arity), MultiPoly(arity), MultiPoly(arity)};
  for (std::size_t i = 0; i < kVariables; ++i) {
    for (std::size_t j = i; j < kVariables; ++j) {
      const BigInt& c = q.coeff(i, j);
      if (c == 0) continue;
      out.rr += (a[i] * a[j]) * c;
      out.ss += (b[i] * b[j]) * c;
      if (i == j) {
        out.rs += (a[i] * b[i]) * BigInt(2 * c);
      } else {
        out.rs += (a[i] * b[j] + a[j] * b[i]) * c;
      }
    }
  }
  return out;
}

}  // namespace biquad
