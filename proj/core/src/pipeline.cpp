#include "biquad/pipeline.hpp"

#include "biquad/exactmath/factor.hpp"
#include "biquad/exactmath/resultant.hpp"
#include "biquad/reduction.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace biquad {

using json = nlohmann::json;

void PipelineConfig::validate() const {
  for (auto p : good_prime_samples)
    if (p >= PrimeField::kMaxModulus || !is_prime_u64(p))
      throw std::invalid_argument("good prime sample " + std::to_string(p) + " is not a prime below 2^32");
  if (search_budget == 0) throw std::invalid_argument("search budget must be at least 1");
  if (lift_precision == 0) throw std::invalid_argument("lift precision must be at least 1");
}

std::string_view to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::complete_positive:
      return "complete-positive";
    case CertificateStatus::complete_negative:
      return "complete-negative";
    case CertificateStatus::incomplete:
      return "incomplete";
  }
  return "incomplete";
}

int exit_code(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::complete_positive:
      return 0;
    case CertificateStatus::complete_negative:
      return 1;
    case CertificateStatus::incomplete:
      return 2;
  }
  return 2;
}

namespace {

std::string dec(std::uint64_t n) { return std::to_string(n); }
std::string dec(const BigInt& n) { return to_decimal(n); }

template <class Range>
json dec_array(const Range& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(dec(x));
  return a;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json interval_json(const RationalInterval& iv) {
  return {{"lo", to_decimal(iv.lo)}, {"hi", to_decimal(iv.hi)}, {"approx", to_fixed(iv.hi, 7)}};
}

json poly_json(const IntPoly& f) {
  json coeffs = json::array();
  for (int d = 0; d <= f.degree(); ++d) coeffs.push_back(dec(f.coeff(static_cast<std::size_t>(d))));
  return {{"text", to_string(f, 't')}, {"coefficients_low_to_high", coeffs}, {"degree", std::to_string(f.degree())}};
}

json input_json(const PencilInput& in) {
  json fano = json::array();
  for (const auto& w : in.fano_witnesses)
    fano.push_back({{"prime", dec(w.prime)}, {"chart", w.chart.to_string()}, {"coords", dec_array(w.coords)}});
  json sing = json::array();
  for (const auto& w : in.singular_witnesses)
    sing.push_back({{"prime", dec(w.prime)}, {"coords", dec_array(w.coords)}});
  return {{"q1", in.q1.to_string()}, {"q2", in.q2.to_string()}, {"fano_witnesses", fano}, {"singular_witnesses", sing}};
}

json certificate_json(const LocalPointCertificate& c, std::string_view source) {
  json j = {{"place", c.place},
            {"liftable", std::string(to_string(c.liftable))},
            {"justification", c.justification},
            {"source", std::string(source)}};
  if (c.chart) {
    j["chart"] = c.chart->to_string();
    j["coordinates"] = dec_array(c.coordinates);
    j["jacobian_rank"] = dec(c.jacobian_rank);
  }
  if (!c.lift.empty()) {
    j["lift"] = dec_array(c.lift);
    j["lift_modulus"] = dec(c.lift_modulus);
  }
  if (c.place == "real") {
    json roots = json::array();
    for (const auto& iv : c.real_roots) roots.push_back(interval_json(iv));
    j["real_root_intervals"] = roots;
  }
  return j;
}

json missing_place(const std::string& place, const std::string& why) {
  return {{"place", place}, {"liftable", std::string(to_string(Liftable::undetermined))}, {"justification", why},
          {"source", "none"}};
}

json tally_json(const ChartTally& t) {
  return {{"chart", t.chart.to_string()},
          {"on_fano", dec(t.on_fano)},
          {"smooth", dec(t.smooth)},
          {"rank_histogram", dec_array(t.rank_histogram)}};
}

json search_json(const SearchResult& r, std::size_t max_points = 16) {
  json pts = json::array();
  for (std::size_t k = 0; k < r.points.size() && k < max_points; ++k)
    pts.push_back({{"chart", r.points[k].chart.to_string()}, {"coords", dec_array(r.points[k].coords)}});
  json tallies = json::array();
  for (const auto& t : r.tallies) tallies.push_back(tally_json(t));
  return {{"prime", dec(r.prime)},
          {"exhaustive", r.exhaustive},
          {"evaluated", dec(r.evaluated)},
          {"status", std::string(to_string(r.status))},
          {"smooth_points_found", dec(r.points.size())},
          {"smooth_points", pts},
          {"chart_tallies", tallies}};
}

json point_json(const ProjectivePoint& p) { return dec_array(p); }

json locus_json(const SingularLocusReport& r) {
  json pts = json::array();
  for (std::size_t k = 0; k < r.points.size(); ++k)
    pts.push_back({{"coords", point_json(r.points[k])}, {"jacobian_rank", dec(r.ranks[k])}});
  return {{"prime", dec(r.prime)},
          {"method", std::string(to_string(r.method))},
          {"points", pts},
          {"cone_check", cone_check(r) ? "non-conical" : "conical"}};
}

json mod2_form_json(const Mod2FormReport& r) {
  json facts = json::array();
  for (auto [a, b] : r.factorizations) facts.push_back(json::array({linear_to_string(a), linear_to_string(b)}));
  json j = {{"name", r.name}, {"form", quadratic_to_string(r.form)}, {"linear_factorizations", facts}};
  if (r.square_of) j["square_of"] = linear_to_string(*r.square_of);
  return j;
}

json mod2_json(const Mod2Report& r) {
  json comps = json::array();
  for (const auto& c : r.non_reduced)
    comps.push_back({{"factored_form", c.factored_form},
                     {"hyperplane", linear_to_string(c.hyperplane)},
                     {"other_form", c.other_form},
                     {"restricts_to_square_of", linear_to_string(c.square_root)}});
  return {{"prime", "2"},
          {"q1", mod2_form_json(r.q1)},
          {"q2", mod2_form_json(r.q2)},
          {"reducible", r.reducible},
          {"non_reduced_components", comps},
          {"verdict", r.verdict}};
}

json error_json(std::string_view stage, const std::string& message) {
  return {{"stage", std::string(stage)}, {"message", message}};
}

json external_inputs() {
  return json::array({
      {{"fact", "Pic^1_C(Q) is empty"},
       {"citation", "Bruin-Stoll reduction to rank 0 of Jac(C); rank computed unconditionally by Fisher-Yan"},
       {"consequence", "F1(X) has order 4 in Sha(Pic^0_C), so X is irrational over Q"}},
      {{"fact", "real Weierstrass points give a real line on X"},
       {"citation", "Bhargava-Gross-Wang"},
       {"consequence", "X is R-rational"}},
      {{"fact", "at a prime of good reduction F1(X_p) is a torsor under Pic^0 of C_p"},
       {"citation", "Lang's theorem"},
       {"consequence", "F1(X) has smooth F_p-points, hence Q_p-points by Hensel's lemma"}},
      {{"fact", "X is rational over a field k iff F1(X) has a k-point"},
       {"citation", "Hassett-Tschinkel over R; Benoist-Wittenberg over arbitrary fields"},
       {"consequence", "local points of F1(X) give local rationality"}},
  });
}

std::vector<GrassmannChart> ordered_charts() {
  auto all = GrassmannChart::all();
  std::vector<GrassmannChart> out(all.begin(), all.end());
  // The standard chart first; the rest in lexicographic order.
  std::stable_partition(out.begin(), out.end(), [](const GrassmannChart& c) { return c == GrassmannChart::standard(); });
  return out;
}

struct PlaceOutcome {
  json place;
  json detail;
  bool certified = false;
};

PlaceOutcome bad_prime_place(const PencilInput& in, const PencilOfQuadrics& pencil, std::uint64_t p,
                             const PipelineConfig& cfg) {
  PlaceOutcome out;
  out.detail = json::object();
  json supplied = json::array();
  for (const auto& w : in.fano_witnesses) {
    if (w.prime != p) continue;
    FanoSystem sys = fano_system(pencil, w.chart);
    FanoPointCheck chk = verify_fano_point(sys, w.coords, p);
    json sj = {{"chart", w.chart.to_string()},
               {"coords", dec_array(w.coords)},
               {"on_fano", chk.on_fano},
               {"jacobian_rank", dec(chk.jacobian_rank)},
               {"smooth", chk.smooth}};
    if (chk.on_fano) {
      LocalPointCertificate lc = hensel_certify(sys, w.coords, p, cfg.lift_precision);
      sj["liftable"] = std::string(to_string(lc.liftable));
      if (lc.liftable == Liftable::yes && !out.certified) {
        out.place = certificate_json(lc, "verified supplied witness");
        out.certified = true;
      }
    }
    supplied.push_back(sj);
  }
  out.detail["supplied_witnesses"] = supplied;
  if (out.certified) return out;

  if (p <= kExhaustiveSearchMaxPrime || cfg.search_large_primes) {
    SearchOptions opts;
    opts.budget = cfg.search_budget;
    opts.seed = cfg.prng_seed;
    opts.threads = cfg.threads;
    SearchResult r = search_smooth_points(pencil, p, opts);
    out.detail["search"] = search_json(r);
    if (!r.points.empty()) {
      const FanoWitness& w = r.points.front();
      LocalPointCertificate lc = hensel_certify(fano_system(pencil, w.chart), w.coords, p, cfg.lift_precision);
      if (lc.liftable == Liftable::yes) {
        out.place = certificate_json(lc, "found by search");
        out.certified = true;
        return out;
      }
    }
    std::string why = r.status == SearchStatus::none_exhaustive
                          ? "exhaustive scan of all 15 charts found no smooth F_p-point of F1(X)"
                          : "no witness supplied and the sampling search found no smooth F_p-point";
    out.place = missing_place(dec(p), why);
  } else {
    out.detail["search"] = "skipped: no smooth witness supplied and sampling search disabled for p > 5";
    out.place = missing_place(dec(p), "no smooth F_p-point of F1(X) supplied");
  }
  return out;
}

PlaceOutcome good_prime_place(const PencilOfQuadrics& pencil, std::uint64_t p, const PipelineConfig& cfg) {
  PlaceOutcome out;
  out.detail = json::object();
  Smoothness s = smoothness_mod_p(pencil, p);
  out.detail["smoothness_mod_p"] = std::string(to_string(s));
  if (s != Smoothness::smooth) {
    out.place = missing_place(dec(p), "reduction mod p is not smooth");
    return out;
  }
  LocalPointCertificate cert;
  cert.place = dec(p);
  cert.liftable = Liftable::yes;
  cert.justification =
      "good reduction: f mod p is squarefree of degree 6, so F1(X_p) is a torsor under Pic^0 of C_p and has "
      "smooth F_p-points by Lang's theorem; Hensel's lemma gives a Q_p-point";
  std::string source = "good reduction";
  if (p <= kExhaustiveSearchMaxPrime) {
    for (const auto& c : ordered_charts()) {
      SearchOptions opts;
      opts.seed = cfg.prng_seed;
      opts.threads = cfg.threads;
      opts.charts = {c};
      SearchResult r = search_smooth_points(pencil, p, opts);
      if (r.points.empty()) continue;
      const FanoWitness& w = r.points.front();
      LocalPointCertificate lc = hensel_certify(fano_system(pencil, w.chart), w.coords, p, cfg.lift_precision);
      if (lc.liftable == Liftable::yes) {
        cert = lc;
        source = "good reduction; point found by search";
        break;
      }
    }
  }
  out.place = certificate_json(cert, source);
  out.certified = true;
  return out;
}

json reduction_json(const PencilInput& in, const PencilOfQuadrics& pencil, std::uint64_t p, unsigned threads) {
  if (p == 2) return mod2_json(mod2_degeneracy(pencil));
  SingularLocusReport r = singular_locus(pencil, p, LocusMethod::kernel_guided, threads);
  json j = locus_json(r);
  if (p <= kExhaustiveLocusMaxPrime) {
    SingularLocusReport ex = singular_locus(pencil, p, LocusMethod::exhaustive, threads);
    j["exhaustive_cross_check"] = ex.points == r.points && ex.ranks == r.ranks ? "agree" : "disagree";
  }
  json witnesses = json::array();
  const PrimeField F(p);
  for (const auto& w : in.singular_witnesses) {
    if (w.prime != p) continue;
    json wj = {{"coords", point_json(w.coords)}};
    if (std::all_of(w.coords.begin(), w.coords.end(), [](auto c) { return c == 0; })) {
      wj["valid"] = false;
      wj["reason"] = "zero vector";
    } else {
      ProjectivePoint n = normalize_projective(w.coords, F);
      bool on_x = verify_projective_point(pencil, std::span<const std::uint64_t, kVariables>(w.coords), p);
      bool in_locus = std::binary_search(r.points.begin(), r.points.end(), n);
      wj["on_x"] = on_x;
      wj["in_singular_locus"] = in_locus;
      wj["valid"] = on_x && in_locus;
    }
    witnesses.push_back(wj);
  }
  j["supplied_witnesses"] = witnesses;
  return j;
}

json rational_points(const PencilOfQuadrics& pencil) {
  json pts = json::array();
  for (std::size_t k = 0; k < kVariables; ++k) {
    std::array<BigRational, kVariables> v;
    for (auto& x : v) x = 0;
    v[k] = 1;
    if (verify_projective_point(pencil, std::span<const BigRational, kVariables>(v))) {
      json c = json::array();
      for (const auto& x : v) c.push_back(to_decimal(x));
      pts.push_back(c);
    }
  }
  return pts;
}

std::string join(const std::vector<std::string>& xs, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? std::string(sep) : "") + xs[k];
  return out;
}

}  // namespace

RationalityCertificate run_pipeline(const PencilInput& in, const PipelineConfig& cfg) {
  cfg.validate();
  json cert = json::object();
  json errors = json::array();
  std::ostringstream summary;
  cert["input"] = input_json(in);
  cert["external_inputs"] = external_inputs();
  cert["config"] = {{"good_prime_samples", dec_array(cfg.good_prime_samples)},
                    {"search_budget", dec(cfg.search_budget)},
                    {"lift_precision", dec(cfg.lift_precision)},
                    {"prng_seed", dec(cfg.prng_seed)},
                    {"search_large_primes", cfg.search_large_primes}};

  RationalityCertificate result;
  auto finish = [&](CertificateStatus status, std::string verdict) {
    cert["errors"] = errors;
    cert["status"] = std::string(to_string(status));
    cert["verdict"] = verdict;
    summary << "verdict: " << verdict << " [" << to_string(status) << "]\n";
    result.status = status;
    result.verdict = std::move(verdict);
    result.json = dump(cert);
    result.summary = summary.str();
    return result;
  };

  std::optional<PencilOfQuadrics> built;
  try {
    built.emplace(in.pencil());
  } catch (const std::logic_error& e) {
    errors.push_back(error_json("characteristic_form", e.what()));
    return finish(CertificateStatus::incomplete, "incomplete: characteristic form is not integral");
  }
  const PencilOfQuadrics& pencil = *built;
  const IntPoly& f = pencil.char_form();
  cert["characteristic_form"] = poly_json(f);
  summary << "characteristic form: " << to_string(f, 't') << '\n';

  const Smoothness sm = smoothness_check(pencil);
  cert["smoothness"] = std::string(to_string(sm));
  summary << "smoothness: " << to_string(sm) << '\n';
  if (sm == Smoothness::degenerate) return finish(CertificateStatus::incomplete, "degenerate pencil");
  if (sm == Smoothness::singular) {
    if (f.degree() < 6) {
      errors.push_back(error_json("smoothness", "deg f < 6: root at infinity is not supported"));
      return finish(CertificateStatus::incomplete, "incomplete: characteristic form has degree below 6");
    }
    return finish(CertificateStatus::complete_negative, "singular: X is not a smooth threefold");
  }

  std::vector<BigInt> hints;
  for (const auto& w : in.fano_witnesses) hints.emplace_back(static_cast<unsigned long>(w.prime));
  for (const auto& w : in.singular_witnesses) hints.emplace_back(static_cast<unsigned long>(w.prime));
  CurveData cd;
  try {
    cd = curve_data(pencil, hints);
  } catch (const UnfactoredCofactor& e) {
    errors.push_back(error_json("curve_data", e.what()));
    return finish(CertificateStatus::incomplete, "incomplete: discriminant not fully factored");
  }
  json roots = json::array();
  for (const auto& iv : cd.real_roots) roots.push_back(interval_json(iv));
  cert["curve"] = {{"equation", "z^2 = " + to_string(cd.f, 't')},
                   {"poly_discriminant", dec(cd.poly_disc)},
                   {"discriminant", dec(cd.disc)},
                   {"bad_primes", dec_array(cd.bad_primes)},
                   {"real_weierstrass_count", dec(cd.real_weierstrass_count)},
                   {"real_root_intervals", roots}};
  summary << "bad primes: " << join([&] {
    std::vector<std::string> s;
    for (const auto& b : cd.bad_primes) s.push_back(dec(b));
    return s;
  }(), ", ") << '\n';
  cert["rational_points"] = rational_points(pencil);

  std::vector<std::string> missing;
  json places = json::array();
  json details = json::object();

  LocalPointCertificate real = real_place_report(cd);
  places.push_back(certificate_json(real, "Sturm count of f"));
  if (real.liftable != Liftable::yes) missing.push_back("real");
  summary << "place real: " << to_string(real.liftable) << '\n';

  std::set<std::uint64_t> bad_small;
  for (const auto& b : cd.bad_primes) {
    const std::string name = dec(b);
    if (b >= BigInt(static_cast<unsigned long>(PrimeField::kMaxModulus))) {
      errors.push_back(error_json("local_points", "prime " + name + " exceeds the supported field size 2^32"));
      places.push_back(missing_place(name, "prime too large for the supported field arithmetic"));
      missing.push_back(name);
      continue;
    }
    const std::uint64_t p = b.get_ui();
    bad_small.insert(p);
    try {
      PlaceOutcome o = bad_prime_place(in, pencil, p, cfg);
      places.push_back(o.place);
      details[name] = o.detail;
      if (!o.certified) missing.push_back(name);
      summary << "place " << name << ": " << (o.certified ? "certified" : "no witness") << '\n';
    } catch (const std::exception& e) {
      errors.push_back(error_json("local_points", name + ": " + e.what()));
      places.push_back(missing_place(name, "stage error"));
      missing.push_back(name);
    }
  }

  std::vector<std::uint64_t> samples = cfg.good_prime_samples;
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
  json sampled = json::array();
  for (auto p : samples) {
    if (bad_small.count(p)) continue;
    const std::string name = dec(p);
    sampled.push_back(name);
    try {
      PlaceOutcome o = good_prime_place(pencil, p, cfg);
      places.push_back(o.place);
      details[name] = o.detail;
      if (!o.certified) missing.push_back(name);
      summary << "place " << name << " (good): " << (o.certified ? "certified" : "not smooth") << '\n';
    } catch (const std::exception& e) {
      errors.push_back(error_json("good_primes", name + ": " + e.what()));
      places.push_back(missing_place(name, "stage error"));
      missing.push_back(name);
    }
  }
  cert["places"] = places;
  cert["place_details"] = details;
  cert["sampled_good_primes"] = sampled;

  json reductions = json::array();
  for (auto p : bad_small) {
    try {
      reductions.push_back(reduction_json(in, pencil, p, cfg.threads));
    } catch (const std::exception& e) {
      errors.push_back(error_json("reduction", dec(p) + ": " + e.what()));
    }
  }
  cert["reductions"] = reductions;

  if (missing.empty()) return finish(CertificateStatus::complete_positive, std::string(kPositiveVerdict));
  return finish(CertificateStatus::incomplete, "incomplete: no witness at " + join(missing, ", "));
}

RationalityCertificate run_pipeline(const PipelineConfig& cfg) {
  return run_pipeline(read_input_file(cfg.input_path), cfg);
}

CommandReport charform_report(const PencilInput& in) {
  const PencilOfQuadrics pencil = in.pencil();
  const IntPoly& f = pencil.char_form();
  json j = {{"characteristic_form", poly_json(f)}};
  const Smoothness sm = smoothness_check(pencil);
  j["smoothness"] = std::string(to_string(sm));
  if (f.degree() >= 2) {
    try {
      j["poly_discriminant"] = dec(poly_discriminant(f));
    } catch (const std::exception&) {
    }
  }
  std::ostringstream s;
  s << "f(t) = " << to_string(f, 't') << "\nsmoothness: " << to_string(sm) << '\n';
  return {dump(j), s.str(), 0};
}

CommandReport fano_search_report(const PencilInput& in, std::uint64_t prime, const SearchOptions& opts) {
  SearchResult r = search_smooth_points(in.pencil(), prime, opts);
  json j = search_json(r);
  std::ostringstream s;
  s << "p = " << prime << ": " << to_string(r.status) << " (" << r.points.size() << " smooth points, " << r.evaluated
    << " evaluated)\n";
  int code = r.status == SearchStatus::found ? 0 : r.status == SearchStatus::none_exhaustive ? 1 : 2;
  return {dump(j), s.str(), code};
}

CommandReport verify_point_report(const PencilInput& in, std::uint64_t prime, const GrassmannChart& chart,
                                  const std::array<std::uint64_t, kChartParameters>& coords, unsigned lift_precision) {
  FanoSystem sys = fano_system(in.pencil(), chart);
  FanoPointCheck chk = verify_fano_point(sys, coords, prime);
  json j = {{"prime", dec(prime)},
            {"chart", chart.to_string()},
            {"coords", dec_array(coords)},
            {"on_fano", chk.on_fano},
            {"jacobian_rank", dec(chk.jacobian_rank)},
            {"smooth", chk.smooth}};
  if (chk.on_fano) {
    LocalPointCertificate lc = hensel_certify(sys, coords, prime, lift_precision);
    j["certificate"] = certificate_json(lc, "verify-point");
  }
  std::ostringstream s;
  s << "on Fano: " << (chk.on_fano ? "yes" : "no") << ", Jacobian rank " << chk.jacobian_rank
    << (chk.smooth ? ", smooth" : ", not smooth") << '\n';
  return {dump(j), s.str(), chk.smooth ? 0 : 1};
}

CommandReport verify_ambient_report(const PencilInput& in, const std::array<BigInt, kVariables>& coords,
                                    std::optional<std::uint64_t> prime) {
  const PencilOfQuadrics pencil = in.pencil();
  json j = {{"coords", dec_array(coords)}};
  bool on = false;
  if (prime) {
    const PrimeField F(*prime);
    std::array<std::uint64_t, kVariables> v{};
    for (std::size_t k = 0; k < kVariables; ++k) v[k] = F.reduce(coords[k]);
    on = verify_projective_point(pencil, std::span<const std::uint64_t, kVariables>(v), *prime);
    j["field"] = "F_" + dec(*prime);
    j["values"] = {dec(evaluate_form(pencil.q1(), std::span<const std::uint64_t, kVariables>(v), F)),
                   dec(evaluate_form(pencil.q2(), std::span<const std::uint64_t, kVariables>(v), F))};
    auto g1 = gradient_at(pencil.q1(), std::span<const std::uint64_t, kVariables>(v), F);
    auto g2 = gradient_at(pencil.q2(), std::span<const std::uint64_t, kVariables>(v), F);
    FpMatrix jac(2, kVariables);
    for (std::size_t k = 0; k < kVariables; ++k) {
      jac(0, k) = g1[k];
      jac(1, k) = g2[k];
    }
    j["jacobian_rank"] = dec(rank_mod_p(jac, F));
  } else {
    std::array<BigRational, kVariables> v;
    for (std::size_t k = 0; k < kVariables; ++k) v[k] = coords[k];
    on = verify_projective_point(pencil, std::span<const BigRational, kVariables>(v));
    j["field"] = "Q";
    j["values"] = {to_decimal(evaluate_form(pencil.q1(), std::span<const BigRational, kVariables>(v))),
                   to_decimal(evaluate_form(pencil.q2(), std::span<const BigRational, kVariables>(v)))};
  }
  j["on_x"] = on;
  std::ostringstream s;
  s << "point " << (on ? "lies" : "does not lie") << " on X over " << j["field"].get<std::string>() << '\n';
  return {dump(j), s.str(), on ? 0 : 1};
}

CommandReport reduction_report(const PencilInput& in, std::uint64_t prime, unsigned threads) {
  std::ostringstream s;
  try {
    json j = reduction_json(in, in.pencil(), prime, threads);
    if (prime == 2) {
      s << "mod 2: " << j["verdict"].get<std::string>() << '\n';
    } else {
      s << "p = " << prime << ": " << j["points"].size() << " singular point(s), "
        << j["cone_check"].get<std::string>() << '\n';
    }
    return {dump(j), s.str(), 0};
  } catch (const std::exception& e) {
    json j = {{"prime", dec(prime)}, {"error", e.what()}};
    s << "reduction analysis failed: " << e.what() << '\n';
    return {dump(j), s.str(), 2};
  }
}

}  // namespace biquad
