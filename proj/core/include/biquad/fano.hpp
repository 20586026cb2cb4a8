#pragma once

#include "biquad/exactmath/linalg_mod_p.hpp"
#include "biquad/pencil.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace biquad {

inline constexpr std::size_t kChartParameters = 8;
inline constexpr std::size_t kFanoEquations = 6;
inline constexpr std::size_t kChartCount = 15;

/// Affine chart of Gr(2,6): lines spanned by the rows of a 2x6 matrix whose
/// pivot columns (i, j), i < j, hold the 2x2 identity. The eight other slots
/// are filled column by column: the k-th non-pivot column carries
/// (t_{2k+1}, t_{2k+2}) in (row A, row B). With pivots (1, 2) this is
///   ( t1 1 0 t3 t5 t7 )
///   ( t2 0 1 t4 t6 t8 ).
/// Pivots are 0-based column indices.
class GrassmannChart {
 public:
  /// Throws std::invalid_argument unless 0 <= i < j <= 5.
  GrassmannChart(std::size_t i, std::size_t j);

  /// All 15 charts, ordered lexicographically by pivots.
  static std::array<GrassmannChart, kChartCount> all();
  /// The chart with pivot columns v and w.
  static GrassmannChart standard() { return {1, 2}; }

  std::size_t first() const { return i_; }
  std::size_t second() const { return j_; }
  /// Position of this chart in all().
  std::size_t index() const;
  /// Non-pivot columns, increasing.
  std::array<std::size_t, 4> free_columns() const;
  /// "i,j"
  std::string to_string() const;

  friend auto operator<=>(const GrassmannChart&, const GrassmannChart&) = default;

 private:
  std::size_t i_;
  std::size_t j_;
};

/// Symbolic rows realizing [r:s] -> r * row_a + s * row_b in the chart parameters.
std::pair<SymbolicRow, SymbolicRow> chart_rows(const GrassmannChart& c);

/// Ambient points r * row_a + s * row_b of the line with parameters `coords`, over F_p.
std::array<std::uint64_t, kVariables> line_point(const GrassmannChart& c, std::span<const std::uint64_t> coords,
                                                 std::uint64_t r, std::uint64_t s, const PrimeField& field);

/// Chart equations of F1(X): the r^2, rs, s^2 coefficients for Q1, then for Q2.
struct FanoSystem {
  GrassmannChart chart;
  std::array<MultiPoly, kFanoEquations> equations;
};

FanoSystem fano_system(const PencilOfQuadrics& p, const GrassmannChart& c);

/// Entry (i, j) = d(equation i)/d(t_{j+1}).
Matrix<MultiPoly> fano_jacobian(const FanoSystem& s);

struct FanoPointCheck {
  bool on_fano = false;
  std::size_t jacobian_rank = 0;
  /// on_fano and jacobian_rank == 6.
  bool smooth = false;
  friend bool operator==(const FanoPointCheck&, const FanoPointCheck&) = default;
};

/// Exact check through the symbolic system. Coordinates are reduced mod p.
FanoPointCheck verify_fano_point(const FanoSystem& s, std::span<const std::uint64_t> pt, std::uint64_t p);

/// The chart system compiled for fast evaluation over one prime field. Every
/// equation has degree <= 2, so each Jacobian entry is an affine form.
class FanoEvaluator {
 public:
  FanoEvaluator(const FanoSystem& s, const PrimeField& field);

  const PrimeField& field() const { return field_; }
  const GrassmannChart& chart() const { return chart_; }

  /// True iff all six equations vanish; stops at the first nonzero one.
  bool on_fano(std::span<const std::uint64_t, kChartParameters> pt) const;
  FpMatrix jacobian(std::span<const std::uint64_t, kChartParameters> pt) const;
  std::size_t jacobian_rank(std::span<const std::uint64_t, kChartParameters> pt) const;
  FanoPointCheck check(std::span<const std::uint64_t, kChartParameters> pt) const;

 private:
  struct Term {
    std::uint64_t coeff;
    // Variable indices; kChartParameters marks the constant 1.
    std::uint8_t a;
    std::uint8_t b;
  };
  struct Affine {
    std::uint64_t constant = 0;
    std::array<std::uint64_t, kChartParameters> linear{};
  };

  PrimeField field_;
  GrassmannChart chart_;
  std::array<std::vector<Term>, kFanoEquations> equations_;
  std::array<std::array<Affine, kChartParameters>, kFanoEquations> jacobian_;
};

}  // namespace biquad
