#include "biquad/exactmath/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace biquad {

namespace {

int sign_of(const BigRational& x) { return sgn(x); }

int sign_at(const IntPoly& p, const std::optional<BigRational>& x, bool minus_infinity) {
  if (p.is_zero()) return 0;
  if (!x) {
    int s = sgn(p.leading());
    if (minus_infinity && p.degree() % 2 == 1) s = -s;
    return s;
  }
  return sign_of(p.evaluate(*x));
}

std::size_t variations(const std::vector<IntPoly>& chain, const std::optional<BigRational>& x, bool minus_infinity) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, x, minus_infinity);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

void require_squarefree(const RatPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has no Sturm chain");
  if (!is_squarefree(f)) throw std::invalid_argument("polynomial is not squarefree");
}

}  // namespace

bool is_squarefree(const RatPoly& f) {
  if (f.is_zero()) return false;
  return gcd(f, f.derivative()).degree() == 0;
}

bool squarefree_degree6(const RatPoly& f) { return f.degree() == 6 && is_squarefree(f); }

std::vector<IntPoly> sturm_chain(const RatPoly& f) {
  require_squarefree(f);
  std::vector<IntPoly> chain;
  chain.push_back(clear_denominators(f));
  chain.push_back(clear_denominators(f.derivative()));
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    RatPoly r = divmod(to_rational(a), to_rational(b)).second;
    if (r.is_zero()) break;
    chain.push_back(clear_denominators(-r));
  }
  return chain;
}

std::size_t sturm_count(const RatPoly& f, const std::optional<BigRational>& lo, const std::optional<BigRational>& hi) {
  if (lo && hi && *hi <= *lo) return 0;
  const auto chain = sturm_chain(f);
  const std::size_t vlo = variations(chain, lo, true);
  const std::size_t vhi = variations(chain, hi, false);
  return vlo - vhi;
}

std::vector<RationalInterval> isolate_real_roots(const RatPoly& f, const BigRational& max_width) {
  require_squarefree(f);
  const auto chain = sturm_chain(f);
  auto count = [&](const BigRational& lo, const BigRational& hi) {
    return variations(chain, lo, true) - variations(chain, hi, false);
  };
  // Cauchy bound: every root satisfies |x| < 1 + max |a_k / a_n|.
  BigRational bound = 0;
  for (const auto& c : f.coefficients()) {
    BigRational r = abs(c / f.leading());
    if (r > bound) bound = r;
  }
  bound += 1;

  std::vector<RationalInterval> out;
  std::vector<std::pair<RationalInterval, std::size_t>> work;
  work.push_back({{-bound, bound}, count(-bound, bound)});
  while (!work.empty()) {
    auto [iv, n] = work.back();
    work.pop_back();
    if (n == 0) continue;
    if (n == 1 && iv.width() < max_width) {
      out.push_back(iv);
      continue;
    }
    BigRational mid = (iv.lo + iv.hi) / 2;
    std::size_t left = count(iv.lo, mid);
    work.push_back({{mid, iv.hi}, n - left});
    work.push_back({{iv.lo, mid}, left});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  return out;
}

namespace {

void split_distinct_linear(const FpPoly& h, std::uint64_t shift, std::vector<std::uint64_t>& out) {
  const PrimeField& F = h.field();
  if (h.degree() <= 0) return;
  if (h.degree() == 1) {
    out.push_back(F.mul(F.neg(h.coeff(0)), F.inv(h.coeff(1))));
    return;
  }
  const std::uint64_t p = F.modulus();
  for (std::uint64_t a = shift; a < p; ++a) {
    FpPoly base(F, std::vector<std::uint64_t>{a, 1});
    FpPoly w = powmod(base, (p - 1) / 2, h) - FpPoly(F, std::vector<std::uint64_t>{1});
    FpPoly s = gcd(h, w);
    if (s.degree() > 0 && s.degree() < h.degree()) {
      split_distinct_linear(s, a + 1, out);
      split_distinct_linear(divmod(h, s).first, a + 1, out);
      return;
    }
  }
  throw std::logic_error("root splitting exhausted all shifts");
}

}  // namespace

std::vector<std::uint64_t> roots_mod_p(const FpPoly& f) {
  if (f.is_zero()) throw std::domain_error("roots of the zero polynomial");
  const PrimeField& F = f.field();
  const std::uint64_t p = F.modulus();
  std::vector<std::uint64_t> out;
  if (f.degree() <= 0) return out;
  if (p < (std::uint64_t{1} << 16)) {
    for (std::uint64_t x = 0; x < p; ++x) {
      if (f.evaluate(x) == 0) out.push_back(x);
    }
    return out;
  }
  const FpPoly t = FpPoly::monomial(F, 1, 1);
  const FpPoly h = gcd(f, powmod(t, p, f.monic()) - t);
  split_distinct_linear(h, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PrimeFieldElement> repeated_roots_mod_p(const IntPoly& f, std::uint64_t p) {
  const PrimeField F(p);
  const FpPoly fp(F, f);
  if (fp.is_zero()) throw std::domain_error("polynomial vanishes identically mod " + std::to_string(p));
  const FpPoly g = gcd(fp, fp.derivative());
  std::vector<PrimeFieldElement> out;
  if (g.degree() <= 0) return out;
  for (auto r : roots_mod_p(g)) out.push_back({r, p});
  return out;
}

}  // namespace biquad
