#include "biquad/exactmath/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace biquad {

MultiPoly MultiPoly::constant(std::size_t arity, const BigInt& c) {
  MultiPoly p(arity);
  p.add_term(Exponents(arity, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t k) {
  if (k >= arity) throw std::out_of_range("variable index out of range");
  MultiPoly p(arity);
  Exponents e(arity, 0);
  e[k] = 1;
  p.add_term(e, 1);
  return p;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (auto k : e) s += k;
    d = std::max(d, static_cast<int>(s));
  }
  return d;
}

BigInt MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const BigInt& c) {
  if (e.size() != arity_) throw std::invalid_argument("exponent vector arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::derivative(std::size_t k) const {
  if (k >= arity_) throw std::out_of_range("variable index out of range");
  MultiPoly d(arity_);
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponents f = e;
    --f[k];
    d.add_term(f, c * static_cast<unsigned long>(e[k]));
  }
  return d;
}

BigInt MultiPoly::evaluate(std::span<const BigInt> x) const {
  if (x.size() != arity_) throw std::invalid_argument("evaluation point arity mismatch");
  BigInt acc = 0;
  for (const auto& [e, c] : terms_) {
    BigInt term = c;
    for (std::size_t k = 0; k < arity_; ++k)
      for (unsigned j = 0; j < e[k]; ++j) term *= x[k];
    acc += term;
  }
  return acc;
}

std::uint64_t MultiPoly::evaluate_mod(std::span<const std::uint64_t> x, const PrimeField& F) const {
  if (x.size() != arity_) throw std::invalid_argument("evaluation point arity mismatch");
  std::uint64_t acc = 0;
  for (const auto& [e, c] : terms_) {
    std::uint64_t term = F.reduce(c);
    for (std::size_t k = 0; k < arity_; ++k)
      for (unsigned j = 0; j < e[k]; ++j) term = F.mul(term, x[k] % F.modulus());
    acc = F.add(acc, term);
  }
  return acc;
}

BigInt MultiPoly::evaluate_mod(std::span<const BigInt> x, const BigInt& modulus) const {
  if (x.size() != arity_) throw std::invalid_argument("evaluation point arity mismatch");
  BigInt acc = 0;
  for (const auto& [e, c] : terms_) {
    BigInt term = c;
    for (std::size_t k = 0; k < arity_; ++k)
      for (unsigned j = 0; j < e[k]; ++j) term = mod_floor(term * x[k], modulus);
    acc += term;
  }
  return mod_floor(acc, modulus);
}

void MultiPoly::check_arity(const MultiPoly& o) const {
  if (o.arity_ != arity_) throw std::invalid_argument("polynomial arity mismatch");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_arity(b);
  MultiPoly r(a.arity_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Exponents e(a.arity_);
      for (std::size_t k = 0; k < a.arity_; ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  if (names.size() != arity_) throw std::invalid_argument("variable name count mismatch");
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const BigInt mag = abs(c);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool constant = std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
    bool wrote = false;
    if (constant || mag != 1) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t k = 0; k < arity_; ++k) {
      if (e[k] == 0) continue;
      if (wrote) out << '*';
      out << names[k];
      if (e[k] > 1) out << '^' << e[k];
      wrote = true;
    }
  }
  return out.str();
}

std::string MultiPoly::to_string() const {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < arity_; ++k) names.push_back("t" + std::to_string(k + 1));
  return to_string(names);
}

}  // namespace biquad
