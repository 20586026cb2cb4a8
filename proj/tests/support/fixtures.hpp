#pragma once

#include "biquad/input.hpp"
#include "biquad/reduction.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace biquad::testing {

inline const char* const kQ1Text = "uv + uw - 4vw + 2vz + 2wz + x^2 - 2xz + y^2 - z^2";
inline const char* const kQ2Text = "uv - uw + uy - 2v^2 + 2vx - 2wy + 2wz + 2xz";
inline constexpr std::uint64_t kLargeBadPrime = 149743897;

inline const std::array<std::uint64_t, 8> kWitnessMod2{1, 1, 0, 0, 1, 1, 0, 0};
inline const std::array<std::uint64_t, 8> kWitnessLarge{10276,     859210,    113976451, 113430900,
                                                        122036333, 94785567, 35411179,  25838500};
inline const ProjectivePoint kSingularLarge{10925789, 85737939, 85378598, 93099029, 51694582, 1};

inline QuadraticForm example_q1() { return parse_form(kQ1Text); }
inline QuadraticForm example_q2() { return parse_form(kQ2Text); }
inline PencilOfQuadrics example_pencil() { return {example_q1(), example_q2()}; }

inline std::string data_file(const std::string& name) { return std::string(BIQUAD_DATA_DIR) + "/" + name; }

/// Cross terms are even by default, so the Gram matrix is integral and so is
/// the characteristic form.
inline QuadraticForm random_form(std::mt19937_64& rng, int bound, bool even_cross_terms = true) {
  std::uniform_int_distribution<int> d(-bound, bound);
  while (true) {
    QuadraticForm::Coefficients c;
    bool nonzero = false;
    for (std::size_t i = 0; i < kVariables; ++i)
      for (std::size_t j = i; j < kVariables; ++j) {
        auto& x = c[monomial_index(i, j)];
        x = d(rng);
        if (i != j && even_cross_terms) x *= 2;
        nonzero = nonzero || x != 0;
      }
    if (nonzero) return QuadraticForm(c);
  }
}

inline QuadraticForm diagonal_form(const std::array<long, kVariables>& a) {
  QuadraticForm::Coefficients c;
  for (auto& x : c) x = 0;
  for (std::size_t k = 0; k < kVariables; ++k) c[monomial_index(k, k)] = a[k];
  return QuadraticForm(c);
}

/// Every point of P^5(F_p) (first nonzero coordinate 1) on X_p where the
/// 2x6 Jacobian has rank <= 1; the reference for singular_locus.
inline std::vector<std::pair<ProjectivePoint, std::size_t>> brute_singular_points(const PencilOfQuadrics& pencil,
                                                                                 std::uint64_t p) {
  const PrimeField F(p);
  std::vector<std::pair<ProjectivePoint, std::size_t>> out;
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < kVariables; ++k) total *= p;
  for (std::uint64_t n = 1; n < total; ++n) {
    ProjectivePoint v{};
    std::uint64_t m = n;
    for (std::size_t k = kVariables; k-- > 0;) {
      v[k] = m % p;
      m /= p;
    }
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] != 1) continue;
    std::span<const std::uint64_t, kVariables> sv(v);
    if (evaluate_form(pencil.q1(), sv, F) != 0 || evaluate_form(pencil.q2(), sv, F) != 0) continue;
    auto g1 = gradient_at(pencil.q1(), sv, F);
    auto g2 = gradient_at(pencil.q2(), sv, F);
    bool g1zero = true, g2zero = true, dependent = true;
    for (std::size_t k = 0; k < kVariables; ++k) {
      g1zero = g1zero && g1[k] == 0;
      g2zero = g2zero && g2[k] == 0;
      for (std::size_t l = k + 1; l < kVariables; ++l)
        dependent = dependent && F.sub(F.mul(g1[k], g2[l]), F.mul(g1[l], g2[k])) == 0;
    }
    if (!dependent) continue;
    out.push_back({v, g1zero && g2zero ? 0 : 1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace biquad::testing
