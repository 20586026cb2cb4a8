#include "biquad/localcert.hpp"

#include "fano_oracles.hpp"
#include "fixtures.hpp"

#include <doctest.h>

using namespace biquad;
using namespace biquad::testing;

namespace {
bool residuals_vanish(const FanoSystem& s, const std::vector<BigInt>& x, const BigInt& modulus) {
  return std::all_of(s.equations.begin(), s.equations.end(),
                     [&](const MultiPoly& e) { return mod_floor(e.evaluate(x), modulus) == 0; });
}
}  // namespace

TEST_CASE("exhaustive census over F_2 matches line containment and central differences") {
  auto pencil = example_pencil();
  SearchResult r = search_smooth_points(pencil, 2);
  CHECK(r.exhaustive);
  CHECK(r.evaluated == 15 * 256);
  REQUIRE(r.tallies.size() == kChartCount);
  const PrimeField F(2);
  for (const auto& tally : r.tallies) {
    FanoSystem s = fano_system(pencil, tally.chart);
    std::array<std::uint64_t, kFanoEquations + 1> hist{};
    std::uint64_t on = 0;
    for (unsigned n = 0; n < 256; ++n) {
      std::array<std::uint64_t, kChartParameters> x{};
      for (std::size_t k = 0; k < kChartParameters; ++k) x[k] = (n >> (7 - k)) & 1;
      if (!line_on_x(pencil, tally.chart, x, 2)) continue;
      ++on;
      ++hist[rank_mod_p(central_difference_jacobian(s, x, 2), F)];
    }
    CHECK(tally.on_fano == on);
    CHECK(tally.rank_histogram == hist);
    CHECK(tally.smooth == hist[6]);
  }
  CHECK(r.status == SearchStatus::none_exhaustive);
  CHECK(r.points.empty());
}

TEST_CASE("smooth points exist at the good primes 3 and 5") {
  auto pencil = example_pencil();
  for (std::uint64_t p : {3ULL, 5ULL}) {
    SearchOptions opts;
    opts.charts = {GrassmannChart::standard()};
    SearchResult r = search_smooth_points(pencil, p, opts);
    CHECK(r.exhaustive);
    REQUIRE(r.status == SearchStatus::found);
    REQUIRE(std::is_sorted(r.points.begin(), r.points.end()));
    for (const auto& w : r.points) {
      REQUIRE(w.rank == 6);
      REQUIRE(verify_fano_point(fano_system(pencil, w.chart), w.coords, p).smooth);
      REQUIRE(line_on_x(pencil, w.chart, w.coords, p));
    }
  }
}

TEST_CASE("search output does not depend on the thread count") {
  auto pencil = example_pencil();
  SearchOptions one, four;
  four.threads = 4;
  auto a = search_smooth_points(pencil, 3, one);
  auto b = search_smooth_points(pencil, 3, four);
  CHECK(a.points == b.points);
  CHECK(a.evaluated == b.evaluated);
  SearchOptions s1, s4;
  s1.budget = s4.budget = 2000;
  s4.threads = 4;
  auto c = search_smooth_points(pencil, 11, s1);
  auto d = search_smooth_points(pencil, 11, s4);
  CHECK_FALSE(c.exhaustive);
  CHECK(c.evaluated == 2000 * kChartCount);
  CHECK(c.points == d.points);
  CHECK(search_smooth_points(pencil, 2).points == search_smooth_points(pencil, 2).points);
}

TEST_CASE("a small sampling budget at the large bad prime finds nothing") {
  SearchOptions opts;
  opts.budget = 1000;
  SearchResult r = search_smooth_points(example_pencil(), kLargeBadPrime, opts);
  CHECK(r.status == SearchStatus::budget_exhausted);
  CHECK(to_string(r.status) == "budget exhausted, none found");
}

TEST_CASE("Hensel lifting of the large-prime witness") {
  FanoSystem s = fano_system(example_pencil(), GrassmannChart::standard());
  for (unsigned k : {1u, 2u, 3u, 6u}) {
    auto cert = hensel_certify(s, kWitnessLarge, kLargeBadPrime, k);
    CHECK(cert.liftable == Liftable::yes);
    CHECK(cert.jacobian_rank == 6);
    CHECK(cert.place == "149743897");
    if (k < 2) {
      CHECK(cert.lift.empty());
      continue;
    }
    const BigInt modulus = pow(BigInt(kLargeBadPrime), k);
    REQUIRE(cert.lift_modulus == modulus);
    CHECK(residuals_vanish(s, cert.lift, modulus));
    for (std::size_t j = 0; j < kChartParameters; ++j) CHECK(mod_u64(cert.lift[j], kLargeBadPrime) == kWitnessLarge[j]);
  }
}

TEST_CASE("Hensel certificate at a good prime and at a rank-deficient point") {
  auto pencil = example_pencil();
  SearchOptions opts;
  opts.charts = {GrassmannChart::standard()};
  auto r = search_smooth_points(pencil, 3, opts);
  REQUIRE_FALSE(r.points.empty());
  FanoSystem s3 = fano_system(pencil, r.points.front().chart);
  auto cert = hensel_certify(s3, r.points.front().coords, 3, 8);
  CHECK(cert.liftable == Liftable::yes);
  CHECK(residuals_vanish(s3, cert.lift, pow(BigInt(3), 8)));

  FanoSystem s = fano_system(pencil, GrassmannChart::standard());
  auto deficient = hensel_certify(s, kWitnessMod2, 2);
  CHECK(deficient.liftable == Liftable::no);
  CHECK(deficient.jacobian_rank == 4);
  CHECK(deficient.lift.empty());
  std::array<std::uint64_t, 8> off{1, 0, 0, 0, 0, 0, 0, 0};
  CHECK_THROWS_AS(hensel_certify(s, off, 2), std::invalid_argument);
}

TEST_CASE("real place") {
  CurveData example = curve_data(example_pencil());
  auto cert = real_place_report(example);
  CHECK(cert.place == "real");
  CHECK(cert.liftable == Liftable::yes);
  CHECK(cert.justification.find("Weierstrass") != std::string::npos);
  REQUIRE(cert.real_roots.size() == 2);
  CHECK(cert.real_roots[0].lo < BigRational(-163299, 50000));
  CHECK(cert.real_roots[0].hi > BigRational(-1633, 500));

  auto synthetic = [](const IntPoly& f) {
    CurveData cd;
    cd.f = f;
    cd.real_roots = isolate_real_roots(to_rational(f));
    cd.real_weierstrass_count = cd.real_roots.size();
    return cd;
  };
  CHECK(real_place_report(synthetic(IntPoly{1, 0, 0, 0, 0, 0, 1})).liftable == Liftable::undetermined);
  auto minus = real_place_report(synthetic(IntPoly{-1, 0, 0, 0, 0, 0, 1}));
  CHECK(minus.liftable == Liftable::yes);
  CHECK(minus.real_roots.size() == 2);
}

TEST_CASE("projective points of X") {
  auto pencil = example_pencil();
  auto check_q = [&](std::array<long, 6> v) {
    std::array<BigRational, 6> w;
    for (std::size_t k = 0; k < 6; ++k) w[k] = v[k];
    return verify_projective_point(pencil, std::span<const BigRational, kVariables>(w));
  };
  CHECK(check_q({1, 0, 0, 0, 0, 0}));
  CHECK(check_q({2, 0, 0, 0, 0, 0}));
  CHECK_FALSE(check_q({0, 0, 0, 1, 0, 0}));
  CHECK_THROWS_AS(check_q({0, 0, 0, 0, 0, 0}), std::invalid_argument);
  std::array<std::uint64_t, 6> singular = kSingularLarge;
  CHECK(verify_projective_point(pencil, std::span<const std::uint64_t, kVariables>(singular), kLargeBadPrime));
}
