#include "dforge/factor.hpp"

#include <algorithm>
#include <map>

#include "dforge/errors.hpp"

namespace dforge {
namespace {

PolyA pth_root(const PolyA& a) {
  const FqField& F = a.field();
  const std::size_t p = F.characteristic();
  std::vector<PolyA::Value> c(a.coeffs().size() / p + 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); i += p) c[i / p] = F.pth_root(a.coeffs()[i]);
  return PolyA(F, std::move(c));
}

void sort_canonical(std::vector<PrimePower>& fs) {
  std::sort(fs.begin(), fs.end(), [](const PrimePower& x, const PrimePower& y) { return x.prime < y.prime; });
}

}  // namespace

std::vector<PrimePower> squarefree_factorization(const PolyA& a0) {
  std::vector<PrimePower> out;
  PolyA a = a0.monic();
  if (a.degree() <= 0) return out;
  const unsigned p = a.field().characteristic();
  const PolyA d = a.derivative();
  if (d.is_zero()) {
    for (auto& f : squarefree_factorization(pth_root(a))) out.push_back({f.prime, f.multiplicity * p});
    return out;
  }
  PolyA c = gcd(a, d);
  PolyA w = a / c;
  unsigned i = 1;
  while (!w.is_one()) {
    PolyA y = gcd(w, c);
    PolyA z = w / y;
    if (!z.is_one()) out.push_back({z.monic(), i});
    ++i;
    w = y;
    c = c / y;
  }
  if (!c.is_one()) {
    for (auto& f : squarefree_factorization(pth_root(c.monic()))) out.push_back({f.prime, f.multiplicity * p});
  }
  // merge equal parts that arise from the recursive branch
  std::map<unsigned, PolyA> by_mult;
  for (auto& f : out) {
    auto it = by_mult.find(f.multiplicity);
    if (it == by_mult.end()) by_mult.emplace(f.multiplicity, f.prime);
    else it->second = it->second * f.prime;
  }
  out.clear();
  for (auto& [m, f] : by_mult) out.push_back({f, m});
  return out;
}

std::vector<std::pair<PolyA, unsigned>> distinct_degree_factorization(const PolyA& f0) {
  std::vector<std::pair<PolyA, unsigned>> out;
  PolyA f = f0.monic();
  const FqField& F = f.field();
  const PolyA X = PolyA::T(F);
  PolyA h = X % f;
  unsigned d = 0;
  while (f.degree() >= 2 * static_cast<int>(d + 1)) {
    ++d;
    h = powmod(h, F.order(), f);
    PolyA g = gcd(h - X, f);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
  return out;
}

std::vector<PolyA> equal_degree_factorization(const PolyA& f0, unsigned d, Rng& rng) {
  PolyA f = f0.monic();
  if (f.degree() <= static_cast<int>(d)) return {f};
  const FqField& F = f.field();
  const std::uint64_t q = F.order();
  const int n = f.degree();
  for (;;) {
    PolyA a = PolyA::random(F, rng, n - 1);
    if (a.degree() < 1) continue;
    PolyA b(F);
    if (F.characteristic() == 2) {
      // absolute trace to F_2 of a viewed in F_{q^d}
      const unsigned k = F.degree();
      PolyA t = a, acc = a;
      for (unsigned i = 1; i < k * d; ++i) {
        t = mulmod(t, t, f);
        acc += t;
      }
      b = acc;
    } else {
      // a^((q^d - 1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q-1)/2)
      PolyA t = a % f, acc = a % f;
      for (unsigned i = 1; i < d; ++i) {
        t = powmod(t, q, f);
        acc = mulmod(acc, t, f);
      }
      b = powmod(acc, (q - 1) / 2, f) - PolyA::constant(F, 1);
    }
    PolyA g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < n) {
      auto left = equal_degree_factorization(g, d, rng);
      auto right = equal_degree_factorization(f / g, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<PrimePower> factor(const PolyA& a, Rng& rng) {
  if (a.is_zero()) fail(ErrorCode::ZeroPolynomial, "cannot factor zero");
  std::vector<PrimePower> out;
  for (auto& [part, mult] : squarefree_factorization(a)) {
    for (auto& [g, d] : distinct_degree_factorization(part)) {
      for (auto& irr : equal_degree_factorization(g, d, rng)) out.push_back({irr, mult});
    }
  }
  sort_canonical(out);
  return out;
}

bool is_irreducible(const PolyA& a) {
  if (a.degree() < 1) return false;
  const PolyA f = a.monic();
  const PolyA X = PolyA::T(f.field());
  PolyA h = X % f;
  for (int i = 1; 2 * i <= f.degree(); ++i) {
    h = powmod(h, f.field().order(), f);
    if (!gcd(h - X, f).is_one()) return false;
  }
  return true;
}

std::vector<PolyA> monic_irreducibles(const FqField& F, unsigned degree, std::size_t limit) {
  std::vector<PolyA> out;
  const std::uint64_t q = F.order();
  std::uint64_t count = 1;
  for (unsigned i = 0; i < degree; ++i) count *= q;
  for (std::uint64_t n = 0; n < count && out.size() < limit; ++n) {
    std::vector<PolyA::Value> c(degree + 1, 0);
    c[degree] = 1;
    std::uint64_t v = n;
    for (unsigned i = 0; i < degree; ++i, v /= q) c[i] = static_cast<PolyA::Value>(v % q);
    PolyA f(F, std::move(c));
    if (is_irreducible(f)) out.push_back(std::move(f));
  }
  return out;
}

std::vector<PolyA> monic_divisors(const FqField& F, const std::vector<PrimePower>& fs) {
  std::vector<PolyA> out{PolyA::constant(F, 1)};
  for (const auto& [p, m] : fs) {
    const std::size_t n = out.size();
    PolyA pk = PolyA::constant(F, 1);
    for (unsigned k = 1; k <= m; ++k) {
      pk = pk * p;
      for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

}  // namespace dforge
