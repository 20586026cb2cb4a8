#include "biquad/reduction.hpp"

#include "biquad/exactmath/linalg_mod_p.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace biquad {

namespace {

std::string render_reduced(const std::array<std::uint64_t, kMonomials>& c) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < kVariables; ++i) {
    for (std::size_t j = i; j < kVariables; ++j) {
      const std::uint64_t v = c[monomial_index(i, j)];
      if (v == 0) continue;
      if (!first) out << " + ";
      first = false;
      if (v != 1) out << v;
      out << kVariableNames[i];
      if (i == j) {
        out << "^2";
      } else {
        out << kVariableNames[j];
      }
    }
  }
  return first ? "0" : out.str();
}

ReducedForm reduce_form(const QuadraticForm& q, const PrimeField& F) {
  ReducedForm r;
  bool all_zero = true;
  for (std::size_t k = 0; k < kMonomials; ++k) {
    r.coeffs[k] = F.reduce(q.coefficients()[k]);
    if (r.coeffs[k] != 0) all_zero = false;
  }
  r.degenerate = all_zero;
  return r;
}

FpMatrix gram_mod_p(const ReducedForm& q, const PrimeField& F) {
  const std::uint64_t half = F.inv(2);
  FpMatrix m(kVariables, kVariables, 0);
  for (std::size_t i = 0; i < kVariables; ++i) {
    m(i, i) = q.coeffs[monomial_index(i, i)];
    for (std::size_t j = i + 1; j < kVariables; ++j) {
      m(i, j) = F.mul(q.coeffs[monomial_index(i, j)], half);
      m(j, i) = m(i, j);
    }
  }
  return m;
}

std::uint64_t eval_reduced(const ReducedForm& q, const ProjectivePoint& x, const PrimeField& F) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < kVariables; ++i)
    for (std::size_t j = i; j < kVariables; ++j) {
      const std::uint64_t c = q.coeffs[monomial_index(i, j)];
      if (c != 0) acc = F.add(acc, F.mul(c, F.mul(x[i], x[j])));
    }
  return acc;
}

std::array<std::uint64_t, kVariables> grad_reduced(const ReducedForm& q, const ProjectivePoint& x,
                                                   const PrimeField& F) {
  std::array<std::uint64_t, kVariables> g{};
  for (std::size_t k = 0; k < kVariables; ++k) {
    std::uint64_t acc = F.mul(F.mul(q.coeffs[monomial_index(k, k)], 2 % F.modulus()), x[k]);
    for (std::size_t j = 0; j < kVariables; ++j) {
      if (j != k) acc = F.add(acc, F.mul(q.coeffs[monomial_index(k, j)], x[j]));
    }
    g[k] = acc;
  }
  return g;
}

std::size_t jacobian_rank(const ReducedPencil& rp, const ProjectivePoint& x, const PrimeField& F) {
  const auto g1 = grad_reduced(rp.q1, x, F);
  const auto g2 = grad_reduced(rp.q2, x, F);
  FpMatrix m(2, kVariables, 0);
  for (std::size_t k = 0; k < kVariables; ++k) {
    m(0, k) = g1[k];
    m(1, k) = g2[k];
  }
  return rank_mod_p(std::move(m), F);
}

bool on_reduction(const ReducedPencil& rp, const ProjectivePoint& x, const PrimeField& F) {
  return eval_reduced(rp.q1, x, F) == 0 && eval_reduced(rp.q2, x, F) == 0;
}

void require_complete_intersection(const ReducedPencil& rp, const PrimeField& F) {
  FpMatrix coeffs(2, kMonomials, 0);
  for (std::size_t k = 0; k < kMonomials; ++k) {
    coeffs(0, k) = rp.q1.coeffs[k];
    coeffs(1, k) = rp.q2.coeffs[k];
  }
  if (rank_mod_p(coeffs, F) < 2) throw std::invalid_argument("reduced forms are proportional; not a complete intersection");
  // A common linear factor makes every member of the pencil a product of two
  // linear forms, i.e. of Gram rank <= 2. One member of rank >= 3 rules it out.
  const FpMatrix m1 = gram_mod_p(rp.q1, F);
  const FpMatrix m2 = gram_mod_p(rp.q2, F);
  const std::uint64_t tries = std::min<std::uint64_t>(F.modulus(), 10);
  for (std::uint64_t a = 0; a <= tries; ++a) {
    FpMatrix member(kVariables, kVariables, 0);
    for (std::size_t i = 0; i < kVariables; ++i)
      for (std::size_t j = 0; j < kVariables; ++j)
        member(i, j) = a == tries ? m2(i, j) : F.add(m1(i, j), F.mul(a % F.modulus(), m2(i, j)));
    if (rank_mod_p(std::move(member), F) >= 3) return;
  }
  throw std::invalid_argument("reduced forms are not certified to define a complete intersection");
}

void add_candidate(const ReducedPencil& rp, ProjectivePoint x, const PrimeField& F,
                   std::vector<std::pair<ProjectivePoint, std::size_t>>& out) {
  if (!on_reduction(rp, x, F)) return;
  const std::size_t rank = jacobian_rank(rp, x, F);
  if (rank <= 1) out.push_back({normalize_projective(x, F), rank});
}

/// Every projective point of span(basis), first nonzero combination coefficient 1.
void scan_span(const ReducedPencil& rp, const std::vector<FpVector>& basis, const PrimeField& F,
               std::vector<std::pair<ProjectivePoint, std::size_t>>& out) {
  const std::uint64_t p = F.modulus();
  const std::size_t d = basis.size();
  if (d == 0) return;
  std::uint64_t count = 0;
  std::uint64_t power = 1;
  for (std::size_t k = 0; k < d; ++k) {
    count += power;
    if (count > kKernelCandidateCap) throw std::runtime_error("kernel candidate set exceeds the 10^6 cap");
    power *= p;
  }
  for (std::size_t lead = 0; lead < d; ++lead) {
    std::vector<std::uint64_t> coef(d, 0);
    coef[lead] = 1;
    while (true) {
      ProjectivePoint x{};
      for (std::size_t k = 0; k < d; ++k) {
        if (coef[k] == 0) continue;
        for (std::size_t c = 0; c < kVariables; ++c) x[c] = F.add(x[c], F.mul(coef[k], basis[k][c]));
      }
      add_candidate(rp, x, F, out);
      std::size_t k = d;
      while (k > lead + 1 && ++coef[k - 1] == p) coef[--k] = 0;
      if (k == lead + 1) break;
    }
  }
}

}  // namespace

std::string ReducedForm::to_string() const { return render_reduced(coeffs); }

ReducedPencil reduce_pencil(const PencilOfQuadrics& p, std::uint64_t prime) {
  const PrimeField F(prime);
  return ReducedPencil{prime, reduce_form(p.q1(), F), reduce_form(p.q2(), F)};
}

ProjectivePoint normalize_projective(ProjectivePoint v, const PrimeField& F) {
  auto it = std::find_if(v.begin(), v.end(), [&](std::uint64_t x) { return x % F.modulus() != 0; });
  if (it == v.end()) throw std::invalid_argument("the zero vector is not a projective point");
  const std::uint64_t inv = F.inv(*it % F.modulus());
  for (auto& x : v) x = F.mul(x % F.modulus(), inv);
  return v;
}

std::string_view to_string(LocusMethod m) {
  return m == LocusMethod::kernel_guided ? "kernel-guided" : "exhaustive";
}

SingularLocusReport singular_locus(const PencilOfQuadrics& p, std::uint64_t prime, LocusMethod method,
                                   unsigned threads) {
  if (prime == 2) throw std::invalid_argument("singular_locus is undefined at p = 2; use mod2_degeneracy");
  const PrimeField F(prime);
  const ReducedPencil rp = reduce_pencil(p, prime);
  if (rp.degenerate()) throw std::invalid_argument("degenerate reduction: a form vanishes mod p");
  require_complete_intersection(rp, F);

  std::vector<std::pair<ProjectivePoint, std::size_t>> found;
  if (method == LocusMethod::exhaustive) {
    if (prime > kExhaustiveLocusMaxPrime) throw std::invalid_argument("exhaustive singular locus scan needs p <= 13");
    std::vector<std::vector<std::pair<ProjectivePoint, std::size_t>>> slots(kVariables);
    detail::parallel_for(kVariables, threads, [&](std::size_t lead) {
      ProjectivePoint x{};
      x[lead] = 1;
      while (true) {
        add_candidate(rp, x, F, slots[lead]);
        std::size_t k = kVariables;
        while (k > lead + 1 && ++x[k - 1] == prime) x[--k] = 0;
        if (k == lead + 1) break;
      }
    });
    for (auto& s : slots) found.insert(found.end(), s.begin(), s.end());
  } else {
    const FpPoly f(F, p.char_form());
    if (f.is_zero()) throw std::invalid_argument("characteristic form vanishes mod p; use the exhaustive method");
    const FpMatrix m1 = gram_mod_p(rp.q1, F);
    const FpMatrix m2 = gram_mod_p(rp.q2, F);
    for (const auto& root : repeated_roots_mod_p(p.char_form(), prime)) {
      FpMatrix member(kVariables, kVariables, 0);
      for (std::size_t i = 0; i < kVariables; ++i)
        for (std::size_t j = 0; j < kVariables; ++j) member(i, j) = F.sub(m1(i, j), F.mul(root.residue, m2(i, j)));
      scan_span(rp, kernel_mod_p(member, F), F, found);
    }
    // The member M2 sits at t = infinity, a repeated root when f loses two or more degrees.
    if (f.degree() <= 4) scan_span(rp, kernel_mod_p(m2, F), F, found);
  }

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  SingularLocusReport r;
  r.prime = prime;
  r.method = method;
  for (auto& [pt, rank] : found) {
    r.points.push_back(pt);
    r.ranks.push_back(rank);
  }
  r.conical = !cone_check(r);
  return r;
}

bool cone_check(const SingularLocusReport& r) {
  return std::none_of(r.ranks.begin(), r.ranks.end(), [](std::size_t k) { return k == 0; });
}

F2Quadratic product_mod2(F2Linear a, F2Linear b) {
  F2Quadratic q = 0;
  for (std::size_t i = 0; i < kVariables; ++i) {
    for (std::size_t j = i; j < kVariables; ++j) {
      unsigned bit;
      if (i == j) {
        bit = ((a >> i) & 1U) & ((b >> i) & 1U);
      } else {
        bit = (((a >> i) & 1U) & ((b >> j) & 1U)) ^ (((a >> j) & 1U) & ((b >> i) & 1U));
      }
      if (bit) q |= F2Quadratic{1} << monomial_index(i, j);
    }
  }
  return q;
}

std::string linear_to_string(F2Linear l) {
  std::string out;
  for (std::size_t k = 0; k < kVariables; ++k) {
    if (!((l >> k) & 1U)) continue;
    if (!out.empty()) out += " + ";
    out += kVariableNames[k];
  }
  return out.empty() ? "0" : out;
}

std::string quadratic_to_string(F2Quadratic q) {
  std::array<std::uint64_t, kMonomials> c{};
  for (std::size_t k = 0; k < kMonomials; ++k) c[k] = (q >> k) & 1U;
  return render_reduced(c);
}

F2Quadratic reduce_form_mod2(const QuadraticForm& q) {
  F2Quadratic m = 0;
  for (std::size_t k = 0; k < kMonomials; ++k) {
    if (mpz_odd_p(q.coefficients()[k].get_mpz_t())) m |= F2Quadratic{1} << k;
  }
  return m;
}

Mod2FormReport analyze_form_mod2(std::string name, F2Quadratic form) {
  Mod2FormReport r;
  r.name = std::move(name);
  r.form = form;
  for (unsigned a = 1; a < 64; ++a) {
    for (unsigned b = a; b < 64; ++b) {
      if (product_mod2(static_cast<F2Linear>(a), static_cast<F2Linear>(b)) == form)
        r.factorizations.push_back({static_cast<F2Linear>(a), static_cast<F2Linear>(b)});
    }
    if (product_mod2(static_cast<F2Linear>(a), static_cast<F2Linear>(a)) == form) r.square_of = static_cast<F2Linear>(a);
  }
  return r;
}

namespace {

/// Smallest m, not vanishing on l = 0, with q = m^2 + l * n for some linear n.
std::optional<F2Linear> square_modulo_hyperplane(F2Quadratic q, F2Linear l) {
  for (unsigned m = 1; m < 64; ++m) {
    if (m == l) continue;
    const F2Quadratic rest = q ^ product_mod2(static_cast<F2Linear>(m), static_cast<F2Linear>(m));
    for (unsigned n = 0; n < 64; ++n) {
      if (product_mod2(l, static_cast<F2Linear>(n)) == rest) return static_cast<F2Linear>(m);
    }
  }
  return std::nullopt;
}

void collect_non_reduced(const Mod2FormReport& factored, const Mod2FormReport& other,
                         std::vector<NonReducedComponent>& out) {
  std::vector<F2Linear> hyperplanes;
  for (const auto& [a, b] : factored.factorizations) {
    hyperplanes.push_back(a);
    hyperplanes.push_back(b);
  }
  std::sort(hyperplanes.begin(), hyperplanes.end());
  hyperplanes.erase(std::unique(hyperplanes.begin(), hyperplanes.end()), hyperplanes.end());
  for (F2Linear l : hyperplanes) {
    if (auto m = square_modulo_hyperplane(other.form, l)) out.push_back({factored.name, l, other.name, *m});
  }
}

}  // namespace

Mod2Report mod2_degeneracy(F2Quadratic q1, F2Quadratic q2) {
  Mod2Report r;
  r.q1 = analyze_form_mod2("Q1", q1);
  r.q2 = analyze_form_mod2("Q2", q2);
  r.reducible = r.q1.has_linear_factor() || r.q2.has_linear_factor();
  collect_non_reduced(r.q1, r.q2, r.non_reduced);
  collect_non_reduced(r.q2, r.q1, r.non_reduced);
  const bool non_reduced = !r.non_reduced.empty() || r.q1.square_of || r.q2.square_of;
  if (r.reducible && non_reduced) {
    r.verdict = "reducible and non-reduced";
  } else if (r.reducible) {
    r.verdict = "reducible";
  } else if (non_reduced) {
    r.verdict = "non-reduced evidence";
  } else {
    r.verdict = "irreducible over F2";
  }
  return r;
}

Mod2Report mod2_degeneracy(const PencilOfQuadrics& p) {
  return mod2_degeneracy(reduce_form_mod2(p.q1()), reduce_form_mod2(p.q2()));
}

}  // namespace biquad
