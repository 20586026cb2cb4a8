// biquad: local rationality certificates for intersections of two quadrics in P^5.
#include "biquad/pipeline.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

using namespace biquad;

template <class T>
std::vector<T> split_list(const std::string& text, std::size_t expected, const char* what) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if constexpr (std::is_same_v<T, BigInt>) {
      out.push_back(parse_integer(item));
    } else {
      BigInt v = parse_integer(item);
      if (v < 0) throw std::invalid_argument(std::string(what) + ": negative entry");
      out.push_back(static_cast<T>(v.get_ui()));
    }
  }
  if (expected && out.size() != expected)
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(expected) + " comma-separated values");
  return out;
}

std::uint64_t checked_prime(std::uint64_t p) {
  if (p >= PrimeField::kMaxModulus || !is_prime_u64(p))
    throw std::invalid_argument("--prime must be a prime below 2^32");
  return p;
}

GrassmannChart parse_chart(const std::string& text) {
  auto piv = split_list<std::size_t>(text, 2, "--chart");
  return GrassmannChart(piv[0], piv[1]);
}

int emit(const CommandReport& r) {
  std::cout << r.json;
  std::cerr << r.summary;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"biquad: local rationality certificates for intersections of two quadrics in P^5"};
  app.require_subcommand(1);

  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads for point searches")->check(CLI::Range(1u, 1024u));

  PipelineConfig cfg;
  std::string good_primes;
  auto* analyze = app.add_subcommand("analyze", "Run the full pipeline and print the certificate");
  analyze->add_option("file", cfg.input_path, "Input file")->required()->check(CLI::ExistingFile);
  analyze->add_option("--budget", cfg.search_budget, "Sampled points per chart for large-prime searches");
  analyze->add_option("--seed", cfg.prng_seed, "PRNG seed for sampling searches");
  analyze->add_option("--good-primes", good_primes, "Comma-separated good primes to sample");
  analyze->add_option("--lift-precision", cfg.lift_precision, "Hensel lift to modulus p^k");
  analyze->add_flag("--search", cfg.search_large_primes, "Sample for witnesses at bad primes above 5");

  std::string file;
  auto* charform = app.add_subcommand("charform", "Print the characteristic form");
  charform->add_option("file", file, "Input file")->required()->check(CLI::ExistingFile);

  std::uint64_t prime = 0;
  std::string chart_text;
  bool exhaustive = false;
  std::size_t budget = kDefaultSearchBudget;
  std::uint64_t seed = kDefaultSeed;
  auto* search = app.add_subcommand("fano-search", "Search for smooth F_p-points of F1(X)");
  search->add_option("file", file, "Input file")->required()->check(CLI::ExistingFile);
  search->add_option("--prime", prime, "Prime p")->required();
  search->add_option("--chart", chart_text, "Restrict to chart i,j (0-based pivots)");
  search->add_flag("--exhaustive", exhaustive, "Scan all p^8 points per chart");
  search->add_option("--budget", budget, "Sampled points per chart");
  search->add_option("--seed", seed, "PRNG seed");

  std::string coords_text;
  unsigned lift_precision = kDefaultLiftPrecision;
  auto* vpoint = app.add_subcommand("verify-point", "Check a point of F1(X) over F_p");
  vpoint->add_option("file", file, "Input file")->required()->check(CLI::ExistingFile);
  vpoint->add_option("--prime", prime, "Prime p")->required();
  vpoint->add_option("--chart", chart_text, "Chart i,j (0-based pivots)")->required();
  vpoint->add_option("--coords", coords_text, "a1,...,a8")->required();
  vpoint->add_option("--lift-precision", lift_precision, "Hensel lift to modulus p^k");

  std::optional<std::uint64_t> ambient_prime;
  auto* vambient = app.add_subcommand("verify-ambient", "Check a point of P^5 against Q1 = Q2 = 0");
  vambient->add_option("file", file, "Input file")->required()->check(CLI::ExistingFile);
  vambient->add_option("--coords", coords_text, "c1,...,c6")->required();
  vambient->add_option("--prime", ambient_prime, "Work over F_p instead of Q");

  auto* reduction = app.add_subcommand("reduction", "Analyze the reduction of X mod p");
  reduction->add_option("file", file, "Input file")->required()->check(CLI::ExistingFile);
  reduction->add_option("--prime", prime, "Prime p")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputErrorExitCode;
  }

  try {
    if (*analyze) {
      cfg.threads = threads;
      if (!good_primes.empty()) cfg.good_prime_samples = split_list<std::uint64_t>(good_primes, 0, "--good-primes");
      cfg.validate();
      PencilInput in = read_input_file(cfg.input_path);
      RationalityCertificate c = run_pipeline(in, cfg);
      std::cout << c.json;
      std::cerr << c.summary;
      return exit_code(c.status);
    }
    PencilInput in = read_input_file(file);
    if (*charform) return emit(charform_report(in));
    if (*search) {
      SearchOptions opts;
      opts.budget = budget;
      opts.seed = seed;
      opts.threads = threads;
      opts.force_exhaustive = exhaustive;
      if (!chart_text.empty()) opts.charts = {parse_chart(chart_text)};
      if (budget == 0) throw std::invalid_argument("--budget must be at least 1");
      return emit(fano_search_report(in, checked_prime(prime), opts));
    }
    if (*vpoint) {
      auto xs = split_list<BigInt>(coords_text, kChartParameters, "--coords");
      const PrimeField F(checked_prime(prime));
      std::array<std::uint64_t, kChartParameters> coords{};
      for (std::size_t k = 0; k < kChartParameters; ++k) coords[k] = F.reduce(xs[k]);
      if (lift_precision == 0) throw std::invalid_argument("--lift-precision must be at least 1");
      return emit(verify_point_report(in, prime, parse_chart(chart_text), coords, lift_precision));
    }
    if (*vambient) {
      auto xs = split_list<BigInt>(coords_text, kVariables, "--coords");
      std::array<BigInt, kVariables> coords;
      std::copy(xs.begin(), xs.end(), coords.begin());
      if (std::all_of(coords.begin(), coords.end(), [](const BigInt& c) { return c == 0; }))
        throw std::invalid_argument("--coords: the zero vector is not a projective point");
      if (ambient_prime) checked_prime(*ambient_prime);
      return emit(verify_ambient_report(in, coords, ambient_prime));
    }
    if (*reduction) return emit(reduction_report(in, checked_prime(prime), threads));
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputErrorExitCode;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputErrorExitCode;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return kInputErrorExitCode;
}
