#include "biquad/pipeline.hpp"

#include "fixtures.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace biquad;
using namespace biquad::testing;
using json = nlohmann::json;

namespace {
PencilInput bare_example_input() { return parse_input(std::string("Q1: ") + kQ1Text + "\nQ2: " + kQ2Text + "\n"); }

const json* find_place(const json& cert, const std::string& place) {
  for (const auto& p : cert["places"])
    if (p["place"] == place) return &p;
  return nullptr;
}

void expect_only_strings_and_bools(const json& j) {
  if (j.is_object() || j.is_array()) {
    for (const auto& x : j) expect_only_strings_and_bools(x);
  } else {
    REQUIRE((j.is_string() || j.is_boolean()));
  }
}
}  // namespace

TEST_CASE("example input with witnesses") {
  PipelineConfig cfg;
  auto cert = run_pipeline(read_input_file(data_file("example_pencil.txt")), cfg);
  json j = json::parse(cert.json);
  expect_only_strings_and_bools(j);
  CHECK(j["characteristic_form"]["text"] == "-t^6 - 3t^5 + 2t^4 + 3t^3 - 3t^2 - 3t - 2");
  CHECK(j["smoothness"] == "smooth");
  CHECK(j["curve"]["bad_primes"] == json::array({"2", "149743897"}));
  CHECK(j["config"]["prng_seed"] == std::to_string(kDefaultSeed));
  CHECK(j["rational_points"][0] == json::array({"1", "0", "0", "0", "0", "0"}));

  const json* large = find_place(j, "149743897");
  REQUIRE(large);
  CHECK((*large)["liftable"] == "yes");
  CHECK((*large)["source"] == "verified supplied witness");
  const json* real = find_place(j, "real");
  REQUIRE(real);
  CHECK((*real)["liftable"] == "yes");
  for (const char* p : {"3", "5", "7", "11", "13"}) {
    const json* good = find_place(j, p);
    REQUIRE(good);
    CHECK((*good)["liftable"] == "yes");
  }

  // The F_2 point is on F1(X) but singular there, and an exhaustive scan of
  // all charts finds no smooth F_2-point.
  const json* two = find_place(j, "2");
  REQUIRE(two);
  CHECK((*two)["liftable"] == "undetermined");
  CHECK(j["place_details"]["2"]["supplied_witnesses"][0]["jacobian_rank"] == "4");
  CHECK(j["place_details"]["2"]["search"]["status"] == "none (exhaustive)");
  CHECK(cert.status == CertificateStatus::incomplete);
  CHECK(cert.verdict == "incomplete: no witness at 2");
  CHECK(exit_code(cert.status) == 2);

  REQUIRE(j["reductions"].size() == 2);
  CHECK(j["reductions"][0]["verdict"] == "reducible and non-reduced");
  CHECK(j["reductions"][1]["cone_check"] == "non-conical");
  CHECK(j["reductions"][1]["supplied_witnesses"][0]["valid"] == true);
  CHECK(j["errors"].empty());
  CHECK(cert.json.back() == '\n');
}

TEST_CASE("witnesses omitted and a small budget at the large prime") {
  PipelineConfig cfg;
  cfg.search_budget = 1000;
  cfg.search_large_primes = true;
  cfg.good_prime_samples = {3};
  auto cert = run_pipeline(bare_example_input(), cfg);
  json j = json::parse(cert.json);
  CHECK(j["place_details"]["149743897"]["search"]["status"] == "budget exhausted, none found");
  CHECK(cert.verdict == "incomplete: no witness at 2, 149743897");
  cfg.search_large_primes = false;
  auto skipped = run_pipeline(bare_example_input(), cfg);
  CHECK(skipped.verdict == "incomplete: no witness at 2, 149743897");
}

TEST_CASE("degenerate and singular pencils") {
  PipelineConfig cfg;
  auto degenerate = run_pipeline(parse_input("Q1: uv\nQ2: uw\n"), cfg);
  CHECK(degenerate.verdict == "degenerate pencil");
  CHECK(degenerate.status == CertificateStatus::incomplete);
  auto singular = run_pipeline(parse_input(std::string("Q1: ") + kQ1Text + "\nQ2: " + kQ1Text + "\n"), cfg);
  CHECK(singular.status == CertificateStatus::complete_negative);
  CHECK(exit_code(singular.status) == 1);
  auto infinity = run_pipeline(parse_input("Q1: u^2 + v^2 + w^2 + x^2 + y^2 + z^2\nQ2: u^2 + 2v^2 + 3w^2 + 4x^2 + 5y^2\n"), cfg);
  CHECK(infinity.status == CertificateStatus::incomplete);
}

TEST_CASE("a non-integral characteristic form is reported, not thrown") {
  PipelineConfig cfg;
  auto cert = run_pipeline(parse_input("Q1: uv + wx + yz\nQ2: u^2\n"), cfg);
  CHECK(cert.status == CertificateStatus::incomplete);
  json j = json::parse(cert.json);
  REQUIRE(j["errors"].size() == 1);
  CHECK(j["errors"][0]["message"] == "non-integral characteristic form");
}

TEST_CASE("certificates are deterministic across thread counts") {
  PipelineConfig one, eight;
  eight.threads = 8;
  auto in = read_input_file(data_file("example_pencil.txt"));
  CHECK(run_pipeline(in, one).json == run_pipeline(in, eight).json);
}

TEST_CASE("config validation") {
  PipelineConfig cfg;
  cfg.good_prime_samples = {4};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.good_prime_samples = {3};
  cfg.search_budget = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("subcommand reports") {
  auto in = read_input_file(data_file("example_pencil.txt"));
  auto vp = verify_point_report(in, kLargeBadPrime, GrassmannChart::standard(), kWitnessLarge, 3);
  CHECK(vp.exit_code == 0);
  CHECK(json::parse(vp.json)["certificate"]["liftable"] == "yes");
  CHECK(verify_point_report(in, 2, GrassmannChart::standard(), kWitnessMod2, 3).exit_code == 1);
  CHECK(verify_ambient_report(in, {1, 0, 0, 0, 0, 0}, std::nullopt).exit_code == 0);
  CHECK(verify_ambient_report(in, {0, 0, 0, 1, 0, 0}, std::nullopt).exit_code == 1);
  std::array<BigInt, 6> sing;
  for (std::size_t k = 0; k < 6; ++k) sing[k] = static_cast<unsigned long>(kSingularLarge[k]);
  auto amb = verify_ambient_report(in, sing, kLargeBadPrime);
  CHECK(amb.exit_code == 0);
  CHECK(json::parse(amb.json)["jacobian_rank"] == "1");
  CHECK(json::parse(charform_report(in).json)["poly_discriminant"] == "149743897");
  CHECK(reduction_report(in, 2, 1).exit_code == 0);
  CHECK(reduction_report(in, 149743897, 1).exit_code == 0);
  SearchOptions opts;
  CHECK(fano_search_report(in, 2, opts).exit_code == 1);
  CHECK(fano_search_report(in, 3, opts).exit_code == 0);
}

TEST_CASE("every echoed witness re-verifies standalone") {
  PipelineConfig cfg;
  auto in = read_input_file(data_file("example_pencil.txt"));
  json j = json::parse(run_pipeline(in, cfg).json);
  for (const auto& place : j["places"]) {
    if (!place.contains("chart") || place["liftable"] != "yes") continue;
    const std::string chart = place["chart"];
    GrassmannChart c(static_cast<std::size_t>(chart[0] - '0'), static_cast<std::size_t>(chart[2] - '0'));
    std::array<std::uint64_t, kChartParameters> coords{};
    for (std::size_t k = 0; k < kChartParameters; ++k) coords[k] = std::stoull(place["coordinates"][k].get<std::string>());
    const std::uint64_t p = std::stoull(place["place"].get<std::string>());
    REQUIRE(verify_point_report(in, p, c, coords, 3).exit_code == 0);
  }
}
