#include "biquad/exactmath/linalg_mod_p.hpp"

#include <stdexcept>

namespace biquad {

std::vector<std::size_t> row_reduce_mod_p(FpMatrix& m, const PrimeField& F) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(row, sel);
    const std::uint64_t inv = F.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = F.mul(m(row, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const std::uint64_t factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = F.sub(m(i, j), F.mul(factor, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank_mod_p(FpMatrix m, const PrimeField& F) { return row_reduce_mod_p(m, F).size(); }

std::vector<FpVector> kernel_mod_p(const FpMatrix& m, const PrimeField& F) {
  if (F.modulus() == 2) throw std::invalid_argument("kernel_mod_p: characteristic 2 is not supported");
  FpMatrix r = m;
  const auto pivots = row_reduce_mod_p(r, F);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<FpVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    FpVector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = F.neg(r(k, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

FpVector multiply_mod_p(const FpMatrix& m, const FpVector& v, const PrimeField& F) {
  if (v.size() != m.cols()) throw std::invalid_argument("matrix-vector shape mismatch");
  FpVector out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] = F.add(out[i], F.mul(m(i, j), v[j]));
  return out;
}

}  // namespace biquad
