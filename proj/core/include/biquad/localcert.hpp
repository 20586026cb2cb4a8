#pragma once

#include "biquad/fano.hpp"
#include "biquad/pencil.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace biquad {

enum class Liftable { yes, no, undetermined };
std::string_view to_string(Liftable l);

/// Evidence that F1(X) has a point over the completion at one place.
struct LocalPointCertificate {
  /// Decimal prime, or "real".
  std::string place;
  std::optional<GrassmannChart> chart;
  std::vector<std::uint64_t> coordinates;
  std::size_t jacobian_rank = 0;
  Liftable liftable = Liftable::undetermined;
  std::string justification;
  /// Solution of the chart system modulo lift_modulus reducing to `coordinates`;
  /// empty when no lift was computed.
  std::vector<BigInt> lift;
  BigInt lift_modulus = 0;
  /// Real place only: isolating intervals of the real roots of f.
  std::vector<RationalInterval> real_roots;
};

struct FanoWitness {
  GrassmannChart chart;
  std::array<std::uint64_t, kChartParameters> coords{};
  std::size_t rank = 0;

  friend bool operator==(const FanoWitness& a, const FanoWitness& b) {
    return a.chart == b.chart && a.coords == b.coords && a.rank == b.rank;
  }
  friend auto operator<=>(const FanoWitness& a, const FanoWitness& b) {
    if (auto c = a.chart <=> b.chart; c != 0) return c;
    return a.coords <=> b.coords;
  }
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'b1c0'ffee'2024ULL;
inline constexpr std::size_t kDefaultSearchBudget = 1'000'000;
inline constexpr std::uint64_t kExhaustiveSearchMaxPrime = 5;

struct SearchOptions {
  /// Sampled points per chart when the scan is not exhaustive.
  std::size_t budget = kDefaultSearchBudget;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  /// Scan all p^8 points even when p > 5.
  bool force_exhaustive = false;
  /// Restrict to these charts; all 15 when empty.
  std::vector<GrassmannChart> charts;
};

enum class SearchStatus {
  found,
  /// Every point of every scanned chart was checked; no smooth point exists there.
  none_exhaustive,
  /// Sampling budget spent without a hit; not a proof of absence.
  budget_exhausted,
};
std::string_view to_string(SearchStatus s);

/// Per-chart tallies from an exhaustive scan.
struct ChartTally {
  GrassmannChart chart;
  std::uint64_t on_fano = 0;
  std::uint64_t smooth = 0;
  /// rank_histogram[r] = on-Fano points with Jacobian rank r.
  std::array<std::uint64_t, kFanoEquations + 1> rank_histogram{};
};

struct SearchResult {
  std::uint64_t prime = 0;
  bool exhaustive = false;
  std::uint64_t evaluated = 0;
  SearchStatus status = SearchStatus::budget_exhausted;
  /// Smooth points, sorted by (chart pivots, coordinates), without duplicates.
  std::vector<FanoWitness> points;
  /// Filled for exhaustive scans, one entry per scanned chart.
  std::vector<ChartTally> tallies;
};

/// Smooth F_p-points of F1(X) on the chart systems. Exhaustive for p <= 5 (or
/// when forced), otherwise seeded sampling of `budget` points per chart. The
/// output does not depend on the thread count.
SearchResult search_smooth_points(const PencilOfQuadrics& p, std::uint64_t prime, const SearchOptions& opts = {});

inline constexpr unsigned kDefaultLiftPrecision = 3;

/// Hensel certificate for an F_p-point of the chart system. liftable is
/// yes iff the Jacobian has rank 6 there; when k >= 2 the point is then
/// Newton-lifted to a solution modulo p^k and the lift is verified.
/// Throws std::invalid_argument if the point is not on the system.
LocalPointCertificate hensel_certify(const FanoSystem& s, std::span<const std::uint64_t> pt, std::uint64_t p,
                                     unsigned k = kDefaultLiftPrecision);

/// Certificate for the real place from the real Weierstrass points of C.
LocalPointCertificate real_place_report(const CurveData& cd);

/// True iff Q1 and Q2 both vanish at v. Throws std::invalid_argument for the zero vector.
bool verify_projective_point(const PencilOfQuadrics& p, std::span<const BigRational, kVariables> v);
bool verify_projective_point(const PencilOfQuadrics& p, std::span<const std::uint64_t, kVariables> v,
                             std::uint64_t prime);

}  // namespace biquad
