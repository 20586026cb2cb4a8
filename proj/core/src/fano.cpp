#include "biquad/fano.hpp"

#include <stdexcept>

namespace biquad {

GrassmannChart::GrassmannChart(std::size_t i, std::size_t j) : i_(i), j_(j) {
  if (!(i < j && j < kVariables)) throw std::invalid_argument("chart pivots must satisfy 0 <= i < j <= 5");
}

std::array<GrassmannChart, kChartCount> GrassmannChart::all() {
  std::array<GrassmannChart, kChartCount> out{
      GrassmannChart{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4},
      {1, 5},               {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};
  return out;
}

std::size_t GrassmannChart::index() const {
  // Charts with first pivot < i_ come first: sum over k < i_ of (5 - k).
  return i_ * (2 * kVariables - i_ - 1) / 2 + (j_ - i_ - 1);
}

std::array<std::size_t, 4> GrassmannChart::free_columns() const {
  std::array<std::size_t, 4> out{};
  std::size_t k = 0;
  for (std::size_t c = 0; c < kVariables; ++c) {
    if (c != i_ && c != j_) out[k++] = c;
  }
  return out;
}

std::string GrassmannChart::to_string() const { return std::to_string(i_) + "," + std::to_string(j_); }

std::pair<SymbolicRow, SymbolicRow> chart_rows(const GrassmannChart& c) {
  SymbolicRow a;
  SymbolicRow b;
  for (std::size_t k = 0; k < kVariables; ++k) {
    a[k] = MultiPoly(kChartParameters);
    b[k] = MultiPoly(kChartParameters);
  }
  a[c.first()] = MultiPoly::constant(kChartParameters, 1);
  b[c.second()] = MultiPoly::constant(kChartParameters, 1);
  const auto cols = c.free_columns();
  for (std::size_t k = 0; k < cols.size(); ++k) {
    a[cols[k]] = MultiPoly::variable(kChartParameters, 2 * k);
    b[cols[k]] = MultiPoly::variable(kChartParameters, 2 * k + 1);
  }
  return {a, b};
}

std::array<std::uint64_t, kVariables> line_point(const GrassmannChart& c, std::span<const std::uint64_t> coords,
                                                 std::uint64_t r, std::uint64_t s, const PrimeField& F) {
  if (coords.size() != kChartParameters) throw std::invalid_argument("chart point needs 8 coordinates");
  std::array<std::uint64_t, kVariables> out{};
  out[c.first()] = r % F.modulus();
  out[c.second()] = s % F.modulus();
  const auto cols = c.free_columns();
  for (std::size_t k = 0; k < cols.size(); ++k) {
    out[cols[k]] = F.add(F.mul(coords[2 * k] % F.modulus(), r % F.modulus()),
                         F.mul(coords[2 * k + 1] % F.modulus(), s % F.modulus()));
  }
  return out;
}

FanoSystem fano_system(const PencilOfQuadrics& p, const GrassmannChart& c) {
  const auto [a, b] = chart_rows(c);
  const auto r1 = restrict_to_line(p.q1(), a, b);
  const auto r2 = restrict_to_line(p.q2(), a, b);
  return FanoSystem{c, {r1.rr, r1.rs, r1.ss, r2.rr, r2.rs, r2.ss}};
}

Matrix<MultiPoly> fano_jacobian(const FanoSystem& s) {
  Matrix<MultiPoly> j(kFanoEquations, kChartParameters, MultiPoly(kChartParameters));
  for (std::size_t i = 0; i < kFanoEquations; ++i) {
    for (std::size_t k = 0; k < kChartParameters; ++k) {
      j(i, k) = s.equations[i].arity() == kChartParameters ? s.equations[i].derivative(k) : MultiPoly(kChartParameters);
    }
  }
  return j;
}

FanoPointCheck verify_fano_point(const FanoSystem& s, std::span<const std::uint64_t> pt, std::uint64_t p) {
  if (pt.size() != kChartParameters) throw std::invalid_argument("chart point needs 8 coordinates");
  const PrimeField F(p);
  std::vector<std::uint64_t> x(pt.begin(), pt.end());
  for (auto& v : x) v %= p;
  FanoPointCheck out;
  out.on_fano = true;
  for (const auto& e : s.equations) {
    if (e.evaluate_mod(x, F) != 0) out.on_fano = false;
  }
  const auto jac = fano_jacobian(s);
  FpMatrix m(kFanoEquations, kChartParameters, 0);
  for (std::size_t i = 0; i < kFanoEquations; ++i)
    for (std::size_t k = 0; k < kChartParameters; ++k) m(i, k) = jac(i, k).evaluate_mod(x, F);
  out.jacobian_rank = rank_mod_p(std::move(m), F);
  out.smooth = out.on_fano && out.jacobian_rank == kFanoEquations;
  return out;
}

FanoEvaluator::FanoEvaluator(const FanoSystem& s, const PrimeField& field) : field_(field), chart_(s.chart) {
  for (std::size_t i = 0; i < kFanoEquations; ++i) {
    const MultiPoly& eq = s.equations[i];
    if (eq.total_degree() > 2) throw std::invalid_argument("Fano chart equation of degree > 2");
    for (const auto& [e, c] : eq.terms()) {
      const std::uint64_t coeff = field_.reduce(c);
      if (coeff == 0) continue;
      std::array<std::uint8_t, 2> vars{kChartParameters, kChartParameters};
      std::size_t n = 0;
      for (std::size_t k = 0; k < kChartParameters; ++k)
        for (unsigned m = 0; m < e[k]; ++m) vars[n++] = static_cast<std::uint8_t>(k);
      equations_[i].push_back({coeff, vars[0], vars[1]});
      // d(c * x_a * x_b) contributes c * x_b to column a and c * x_a to column b.
      auto add = [&](std::uint8_t col, std::uint8_t other) {
        if (col == kChartParameters) return;
        Affine& cell = jacobian_[i][col];
        if (other == kChartParameters) {
          cell.constant = field_.add(cell.constant, coeff);
        } else {
          cell.linear[other] = field_.add(cell.linear[other], coeff);
        }
      };
      add(vars[0], vars[1]);
      add(vars[1], vars[0]);
    }
  }
}

bool FanoEvaluator::on_fano(std::span<const std::uint64_t, kChartParameters> pt) const {
  const std::uint64_t p = field_.modulus();
  for (const auto& eq : equations_) {
    std::uint64_t acc = 0;
    for (const auto& t : eq) {
      std::uint64_t v = t.coeff;
      if (t.a != kChartParameters) v = v * pt[t.a] % p;
      if (t.b != kChartParameters) v = v * pt[t.b] % p;
      acc += v;
    }
    if (acc % p != 0) return false;
  }
  return true;
}

FpMatrix FanoEvaluator::jacobian(std::span<const std::uint64_t, kChartParameters> pt) const {
  FpMatrix m(kFanoEquations, kChartParameters, 0);
  for (std::size_t i = 0; i < kFanoEquations; ++i) {
    for (std::size_t k = 0; k < kChartParameters; ++k) {
      const Affine& cell = jacobian_[i][k];
      std::uint64_t v = cell.constant;
      for (std::size_t l = 0; l < kChartParameters; ++l) {
        if (cell.linear[l] != 0) v = field_.add(v, field_.mul(cell.linear[l], pt[l]));
      }
      m(i, k) = v;
    }
  }
  return m;
}

std::size_t FanoEvaluator::jacobian_rank(std::span<const std::uint64_t, kChartParameters> pt) const {
  return rank_mod_p(jacobian(pt), field_);
}

FanoPointCheck FanoEvaluator::check(std::span<const std::uint64_t, kChartParameters> pt) const {
  FanoPointCheck out;
  out.on_fano = on_fano(pt);
  out.jacobian_rank = jacobian_rank(pt);
  out.smooth = out.on_fano && out.jacobian_rank == kFanoEquations;
  return out;
}

}  // namespace biquad
