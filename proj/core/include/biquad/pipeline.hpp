#pragma once

#include "biquad/input.hpp"
#include "biquad/localcert.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace biquad {

struct PipelineConfig {
  std::string input_path;
  std::vector<std::uint64_t> good_prime_samples{3, 5, 7, 11, 13};
  std::size_t search_budget = kDefaultSearchBudget;
  unsigned lift_precision = kDefaultLiftPrecision;
  std::uint64_t prng_seed = kDefaultSeed;
  /// Worker threads for point searches; never recorded in the certificate.
  unsigned threads = 1;
  /// Run the sampling search at bad primes above 5 that have no supplied witness.
  bool search_large_primes = false;

  /// Throws std::invalid_argument for a non-prime or too large sample prime,
  /// a zero budget or a zero lift precision.
  void validate() const;
};

enum class CertificateStatus { complete_positive, complete_negative, incomplete };
std::string_view to_string(CertificateStatus s);
/// 0, 1, 2 respectively.
int exit_code(CertificateStatus s);
inline constexpr int kInputErrorExitCode = 3;

struct RationalityCertificate {
  CertificateStatus status = CertificateStatus::incomplete;
  std::string verdict;
  /// Canonical JSON: sorted keys, integers as decimal strings, trailing newline.
  std::string json;
  /// Human-readable digest.
  std::string summary;
};

inline constexpr std::string_view kPositiveVerdict = "locally rational at all places (per cited criteria)";

/// Runs the full analysis on an already parsed input.
RationalityCertificate run_pipeline(const PencilInput& input, const PipelineConfig& cfg);
/// Reads cfg.input_path; ParseError and I/O errors propagate.
RationalityCertificate run_pipeline(const PipelineConfig& cfg);

/// Output of a single-purpose subcommand.
struct CommandReport {
  std::string json;
  std::string summary;
  int exit_code = 0;
};

CommandReport charform_report(const PencilInput& input);
/// exit 0: smooth point found; 1: exhaustive scan found none; 2: sampling budget spent.
CommandReport fano_search_report(const PencilInput& input, std::uint64_t prime, const SearchOptions& opts);
/// exit 0: smooth point of F1(X) mod p; 1 otherwise.
CommandReport verify_point_report(const PencilInput& input, std::uint64_t prime, const GrassmannChart& chart,
                                  const std::array<std::uint64_t, kChartParameters>& coords, unsigned lift_precision);
/// Over Q when prime is empty. exit 0: on X; 1 otherwise.
CommandReport verify_ambient_report(const PencilInput& input, const std::array<BigInt, kVariables>& coords,
                                    std::optional<std::uint64_t> prime);
/// Singular locus and cone check (p odd) or the F_2 degeneracy analysis (p = 2).
/// exit 0 on success, 2 when the analysis could not be carried out.
CommandReport reduction_report(const PencilInput& input, std::uint64_t prime, unsigned threads);

}  // namespace biquad
