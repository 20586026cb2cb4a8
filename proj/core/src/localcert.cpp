#include "biquad/localcert.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace biquad {

std::string_view to_string(Liftable l) {
  switch (l) {
    case Liftable::yes:
      return "yes";
    case Liftable::no:
      return "no";
    case Liftable::undetermined:
      return "undetermined";
  }
  return "undetermined";
}

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::none_exhaustive:
      return "none (exhaustive)";
    case SearchStatus::budget_exhausted:
      return "budget exhausted, none found";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kSampleBlock = std::size_t{1} << 16;

struct Task {
  std::size_t chart_slot;
  std::uint64_t block;
};

struct TaskResult {
  std::vector<FanoWitness> points;
  ChartTally tally{GrassmannChart::standard()};
  std::uint64_t evaluated = 0;
};

void record(const FanoEvaluator& ev, const std::array<std::uint64_t, kChartParameters>& x, TaskResult& out,
            bool tally) {
  ++out.evaluated;
  if (!ev.on_fano(x)) return;
  const std::size_t rank = ev.jacobian_rank(x);
  if (tally) {
    ++out.tally.on_fano;
    ++out.tally.rank_histogram[rank];
  }
  if (rank == kFanoEquations) {
    if (tally) ++out.tally.smooth;
    out.points.push_back({ev.chart(), x, rank});
  }
}

}  // namespace

SearchResult search_smooth_points(const PencilOfQuadrics& pencil, std::uint64_t prime, const SearchOptions& opts) {
  const PrimeField F(prime);
  if (opts.budget == 0) throw std::invalid_argument("search budget must be at least 1");
  std::vector<GrassmannChart> charts = opts.charts;
  if (charts.empty()) {
    const auto all = GrassmannChart::all();
    charts.assign(all.begin(), all.end());
  }
  std::sort(charts.begin(), charts.end());
  charts.erase(std::unique(charts.begin(), charts.end()), charts.end());

  std::vector<FanoEvaluator> evaluators;
  for (const auto& c : charts) evaluators.emplace_back(fano_system(pencil, c), F);

  SearchResult result;
  result.prime = prime;
  result.exhaustive = opts.force_exhaustive || prime <= kExhaustiveSearchMaxPrime;

  std::vector<Task> tasks;
  for (std::size_t c = 0; c < charts.size(); ++c) {
    const std::uint64_t blocks = result.exhaustive ? prime : (opts.budget + kSampleBlock - 1) / kSampleBlock;
    for (std::uint64_t b = 0; b < blocks; ++b) tasks.push_back({c, b});
  }
  std::vector<TaskResult> slots(tasks.size());

  detail::parallel_for(tasks.size(), opts.threads, [&](std::size_t t) {
    const Task& task = tasks[t];
    const FanoEvaluator& ev = evaluators[task.chart_slot];
    TaskResult& out = slots[t];
    out.tally.chart = ev.chart();
    std::array<std::uint64_t, kChartParameters> x{};
    if (result.exhaustive) {
      // Block b fixes t1 = b and walks t2..t8 as a base-p odometer.
      x[0] = task.block;
      while (true) {
        record(ev, x, out, true);
        std::size_t k = kChartParameters - 1;
        while (k >= 1 && ++x[k] == prime) x[k--] = 0;
        if (k == 0) break;
      }
    } else {
      const std::uint64_t begin = task.block * kSampleBlock;
      const std::uint64_t end = std::min<std::uint64_t>(begin + kSampleBlock, opts.budget);
      std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                        static_cast<std::uint32_t>(ev.chart().index()), static_cast<std::uint32_t>(task.block)};
      std::mt19937_64 rng(seq);
      for (std::uint64_t n = begin; n < end; ++n) {
        for (auto& v : x) v = rng() % prime;
        record(ev, x, out, false);
      }
    }
  });

  for (std::size_t c = 0; c < charts.size(); ++c) {
    ChartTally tally{charts[c]};
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      if (tasks[t].chart_slot != c) continue;
      const auto& s = slots[t];
      result.evaluated += s.evaluated;
      result.points.insert(result.points.end(), s.points.begin(), s.points.end());
      tally.on_fano += s.tally.on_fano;
      tally.smooth += s.tally.smooth;
      for (std::size_t r = 0; r <= kFanoEquations; ++r) tally.rank_histogram[r] += s.tally.rank_histogram[r];
    }
    if (result.exhaustive) result.tallies.push_back(tally);
  }
  std::sort(result.points.begin(), result.points.end());
  result.points.erase(std::unique(result.points.begin(), result.points.end()), result.points.end());
  if (!result.points.empty()) {
    result.status = SearchStatus::found;
  } else {
    result.status = result.exhaustive ? SearchStatus::none_exhaustive : SearchStatus::budget_exhausted;
  }
  return result;
}

namespace {

/// Solves a x = b modulo n, where a is square and invertible mod n. Pivots
/// are chosen among entries that are units mod n.
std::vector<BigInt> solve_mod(Matrix<BigInt> a, std::vector<BigInt> b, const BigInt& n) {
  const std::size_t dim = a.rows();
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t sel = col;
    BigInt g;
    for (; sel < dim; ++sel) {
      mpz_gcd(g.get_mpz_t(), a(sel, col).get_mpz_t(), n.get_mpz_t());
      if (g == 1) break;
    }
    if (sel == dim) throw std::logic_error("Jacobian minor is not invertible modulo p^k");
    a.swap_rows(col, sel);
    std::swap(b[col], b[sel]);
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), a(col, col).get_mpz_t(), n.get_mpz_t());
    for (std::size_t j = col; j < dim; ++j) a(col, j) = mod_floor(a(col, j) * inv, n);
    b[col] = mod_floor(b[col] * inv, n);
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const BigInt factor = a(i, col);
      for (std::size_t j = col; j < dim; ++j) a(i, j) = mod_floor(a(i, j) - factor * a(col, j), n);
      b[i] = mod_floor(b[i] - factor * b[col], n);
    }
  }
  return b;
}

}  // namespace

LocalPointCertificate hensel_certify(const FanoSystem& s, std::span<const std::uint64_t> pt, std::uint64_t p,
                                     unsigned k) {
  const FanoPointCheck check = verify_fano_point(s, pt, p);
  if (!check.on_fano) throw std::invalid_argument("point is not on the Fano chart system");
  const PrimeField F(p);
  LocalPointCertificate cert;
  cert.place = std::to_string(p);
  cert.chart = s.chart;
  for (auto v : pt) cert.coordinates.push_back(v % p);
  cert.jacobian_rank = check.jacobian_rank;
  if (!check.smooth) {
    cert.liftable = Liftable::no;
    cert.justification = "Jacobian rank " + std::to_string(check.jacobian_rank) +
                         " < 6 at the point; the smooth-point form of Hensel's lemma does not apply";
    return cert;
  }
  cert.liftable = Liftable::yes;
  cert.justification = "smooth F_p-point (Jacobian rank 6): Hensel's lemma gives a Q_p-point of F1(X)";
  if (k < 2) return cert;

  // Six columns whose minor is invertible mod p; the other two coordinates stay fixed.
  const auto jac = fano_jacobian(s);
  FpMatrix jp(kFanoEquations, kChartParameters, 0);
  for (std::size_t i = 0; i < kFanoEquations; ++i)
    for (std::size_t j = 0; j < kChartParameters; ++j) jp(i, j) = jac(i, j).evaluate_mod(cert.coordinates, F);
  const auto columns = row_reduce_mod_p(jp, F);

  const BigInt modulus = pow(BigInt(static_cast<unsigned long>(p)), k);
  std::vector<BigInt> x;
  for (auto v : cert.coordinates) x.emplace_back(static_cast<unsigned long>(v));
  bool solved = false;
  for (unsigned iter = 0; iter < 2 * k + 8; ++iter) {
    std::vector<BigInt> residual;
    bool zero = true;
    for (const auto& e : s.equations) {
      residual.push_back(e.evaluate_mod(x, modulus));
      if (residual.back() != 0) zero = false;
    }
    if (zero) {
      solved = true;
      break;
    }
    Matrix<BigInt> a(kFanoEquations, kFanoEquations, BigInt(0));
    for (std::size_t i = 0; i < kFanoEquations; ++i)
      for (std::size_t j = 0; j < kFanoEquations; ++j) a(i, j) = jac(i, columns[j]).evaluate_mod(x, modulus);
    const auto delta = solve_mod(std::move(a), std::move(residual), modulus);
    for (std::size_t j = 0; j < kFanoEquations; ++j) x[columns[j]] = mod_floor(x[columns[j]] - delta[j], modulus);
  }
  if (!solved) throw std::logic_error("Newton lifting did not converge");
  for (std::size_t j = 0; j < kChartParameters; ++j) {
    if (mod_u64(x[j], p) != cert.coordinates[j]) throw std::logic_error("lift does not reduce to the input point");
  }
  cert.lift = std::move(x);
  cert.lift_modulus = modulus;
  cert.justification += "; Newton lift verified modulo p^" + std::to_string(k);
  return cert;
}

LocalPointCertificate real_place_report(const CurveData& cd) {
  LocalPointCertificate cert;
  cert.place = "real";
  cert.real_roots = cd.real_roots;
  if (cd.real_weierstrass_count >= 1) {
    cert.liftable = Liftable::yes;
    cert.justification = "C has " + std::to_string(cd.real_weierstrass_count) +
                         " real Weierstrass points; cited criterion (Bhargava-Gross-Wang) gives a real "
                         "point of F1(X)";
  } else {
    cert.liftable = Liftable::undetermined;
    cert.justification = "f has no real roots; the real Weierstrass point criterion does not apply";
  }
  return cert;
}

bool verify_projective_point(const PencilOfQuadrics& p, std::span<const BigRational, kVariables> v) {
  if (std::all_of(v.begin(), v.end(), [](const BigRational& x) { return x == 0; }))
    throw std::invalid_argument("the zero vector is not a projective point");
  return evaluate_form(p.q1(), v) == 0 && evaluate_form(p.q2(), v) == 0;
}

bool verify_projective_point(const PencilOfQuadrics& p, std::span<const std::uint64_t, kVariables> v,
                             std::uint64_t prime) {
  const PrimeField F(prime);
  if (std::all_of(v.begin(), v.end(), [&](std::uint64_t x) { return x % prime == 0; }))
    throw std::invalid_argument("the zero vector is not a projective point");
  return evaluate_form(p.q1(), v, F) == 0 && evaluate_form(p.q2(), v, F) == 0;
}

}  // namespace biquad
