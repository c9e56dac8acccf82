#include "dforge/rational_roots.hpp"

#include <algorithm>
#include <climits>
#include <memory>
#include <optional>
#include <set>

#include "dforge/errors.hpp"
#include "dforge/factor.hpp"
#include "dforge/fq_linalg.hpp"

namespace dforge {
namespace {

// An element of A/(m). Only used as a coefficient type for DensePoly.
class Residue {
 public:
  Residue(std::shared_ptr<const PolyA> m, PolyA v) : m_(std::move(m)), v_(std::move(v)) {
    if (v_.degree() >= m_->degree()) v_ = v_ % *m_;
  }
  const PolyA& value() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_.is_zero(); }
  bool is_one() const noexcept { return v_.is_one(); }
  Residue zero_like() const { return Residue(m_, PolyA(m_->field())); }
  Residue one_like() const { return Residue(m_, PolyA::constant(m_->field(), 1)); }
  Residue operator-() const { return Residue(m_, -v_); }
  friend Residue operator+(const Residue& a, const Residue& b) { return Residue(a.m_, a.v_ + b.v_); }
  friend Residue operator-(const Residue& a, const Residue& b) { return Residue(a.m_, a.v_ - b.v_); }
  friend Residue operator*(const Residue& a, const Residue& b) { return Residue(a.m_, a.v_ * b.v_); }
  friend Residue operator/(const Residue& a, const Residue& b) { return Residue(a.m_, a.v_ * invmod(b.v_, *a.m_)); }
  friend bool operator==(const Residue& a, const Residue& b) noexcept { return a.v_ == b.v_; }

 private:
  std::shared_ptr<const PolyA> m_;
  PolyA v_;
};

// Horner evaluation of an integral polynomial at r modulo m.
PolyA eval_mod(const std::vector<PolyA>& a, const PolyA& r, const PolyA& m) {
  PolyA acc(m.field());
  for (std::size_t i = a.size(); i-- > 0;) acc = (acc * r + a[i]) % m;
  return acc;
}

std::vector<PolyA> derivative(const std::vector<PolyA>& a) {
  std::vector<PolyA> d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i].scaled(a[i].field().from_int(std::int64_t(i))));
  return d;
}

PolyA enumerate_residue(const FqField& F, std::uint64_t code, int degree) {
  std::vector<FqField::Value> c(static_cast<std::size_t>(degree));
  for (auto& x : c) {
    x = static_cast<FqField::Value>(code % F.order());
    code /= F.order();
  }
  return PolyA(F, std::move(c));
}

bool is_root(const PolyQ& g, const RatFunc& r) { return g.eval(r).is_zero(); }

// For a square-free integral polynomial with nonzero constant term.
std::optional<std::vector<RatFunc>> padic_roots(const PolyQ& g, const std::vector<PolyA>& a) {
  const FqField& F = g.zero_elem().field();
  const PolyA& lead = a.back();
  const PolyA& trail = a.front();
  const int num_bound = trail.degree(), den_bound = lead.degree();
  const std::vector<PolyA> da = derivative(a);

  for (unsigned k = 1;; ++k) {
    std::uint64_t size = 1;
    for (unsigned i = 0; i < k; ++i) size *= F.order();
    if (size > 65536) break;
    for (const PolyA& P : monic_irreducibles(F, k)) {
      if ((lead % P).is_zero()) continue;
      auto mp = std::make_shared<const PolyA>(P);
      const Residue z(mp, PolyA(F));
      std::vector<Residue> gc;
      for (const auto& c : a) gc.emplace_back(mp, c);
      const DensePoly<Residue> gP(z, gc);
      if (gcd(gP, gP.derivative()).degree() != 0) continue;

      std::vector<PolyA> local;
      for (std::uint64_t code = 0; code < size && local.size() < static_cast<std::size_t>(gP.degree()); ++code) {
        PolyA r = enumerate_residue(F, code, static_cast<int>(k));
        if (eval_mod(a, r, P).is_zero()) local.push_back(std::move(r));
      }

      // P-adic precision: deg P^K must exceed num_bound + den_bound.
      unsigned K = 1;
      while (static_cast<int>(K * k) <= num_bound + den_bound) ++K;
      const PolyA M = pow(P, K);
      std::vector<RatFunc> out;
      for (PolyA r : local) {
        for (unsigned prec = 1; prec < K;) {
          prec = std::min(2 * prec, K);
          const PolyA Mp = prec == K ? M : pow(P, prec);
          const PolyA fr = eval_mod(a, r, Mp), dr = eval_mod(da, r, Mp);
          r = (r - fr * invmod(dr, Mp)) % Mp;
        }
        // rational reconstruction n = d*r mod M
        PolyA r0 = M, r1 = r, t0(F), t1 = PolyA::constant(F, 1);
        while (r1.degree() > num_bound) {
          auto [q, rem] = divmod(r0, r1);
          r0 = std::exchange(r1, std::move(rem));
          t0 = std::exchange(t1, t0 - q * t1);
        }
        if (t1.is_zero() || t1.degree() > den_bound) continue;
        RatFunc cand(r1, t1);
        if (is_root(g, cand)) out.push_back(cand);
      }
      return out;
    }
  }
  return std::nullopt;
}

bool pth_root(const PolyA& a, PolyA& out) {
  const FqField& F = a.field();
  const std::size_t p = F.characteristic();
  std::vector<FqField::Value> c;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (i % p) {
      if (a.coeffs()[i] != 0) return false;
      continue;
    }
    c.push_back(F.pth_root(a.coeffs()[i]));
  }
  out = PolyA(F, std::move(c));
  return true;
}

void collect_squarefree(const PolyQ& g, std::set<RatFunc>& roots) {
  if (g.degree() == 1) {
    roots.insert(-(g.coeff(0) / g.coeff(1)));
    return;
  }
  if (auto r = padic_roots(g, primitive_part(g))) {
    roots.insert(r->begin(), r->end());
    return;
  }
  // every prime of norm <= 2^16 divides the discriminant or the leading coefficient
  for (const auto& r : rational_roots_by_divisors(g)) roots.insert(r);
}

void collect_roots(const PolyQ& g0, std::set<RatFunc>& roots) {
  if (g0.degree() <= 0) return;
  // strip the factor x^k
  std::size_t low = 0;
  while (g0.coeff(low).is_zero()) ++low;
  PolyQ g = g0;
  if (low > 0) {
    roots.insert(g0.zero_elem());
    g = PolyQ(g0.zero_elem(), std::vector<RatFunc>(g0.coeffs().begin() + static_cast<std::ptrdiff_t>(low), g0.coeffs().end()));
  }
  if (g.degree() <= 0) return;
  const PolyQ d = g.derivative();
  if (d.is_zero()) {
    // g = h(x^p): roots are the p-th roots in Q of the roots of h
    const std::size_t p = g.zero_elem().field().characteristic();
    std::vector<RatFunc> hc;
    for (std::size_t i = 0; i < g.coeffs().size(); i += p) hc.push_back(g.coeff(i));
    std::set<RatFunc> hr;
    collect_roots(PolyQ(g.zero_elem(), std::move(hc)), hr);
    for (const auto& y : hr) {
      PolyA n(y.field()), dd(y.field());
      if (pth_root(y.num(), n) && pth_root(y.den(), dd)) roots.insert(RatFunc(n, dd));
    }
    return;
  }
  const PolyQ s = gcd(g, d);
  if (s.degree() > 0) {
    collect_roots(s, roots);
    collect_squarefree(g / s, roots);
  } else {
    collect_squarefree(g, roots);
  }
}

}  // namespace

std::vector<PolyA> primitive_part(const PolyQ& g) {
  if (g.is_zero()) fail(ErrorCode::ZeroPolynomial, "primitive part of the zero polynomial");
  const FqField& F = g.zero_elem().field();
  PolyA L = PolyA::constant(F, 1);
  for (const auto& c : g.coeffs())
    if (!c.is_zero()) L = L / gcd(L, c.den()) * c.den();
  std::vector<PolyA> a;
  PolyA content(F);
  for (const auto& c : g.coeffs()) {
    a.push_back(c.num() * (L / c.den()));
    content = gcd(content, a.back());
  }
  const auto li = F.inv((a.back() / content).lead());
  for (auto& c : a) c = (c / content).scaled(li);
  return a;
}

std::vector<RatFunc> rational_roots(const PolyQ& g) {
  if (g.is_zero()) fail(ErrorCode::ZeroPolynomial, "rational roots of the zero polynomial");
  std::set<RatFunc> roots;
  collect_roots(g, roots);
  return {roots.begin(), roots.end()};
}

std::vector<RatFunc> rational_roots_by_divisors(const PolyQ& g) {
  if (g.is_zero()) fail(ErrorCode::ZeroPolynomial, "rational roots of the zero polynomial");
  const FqField& F = g.zero_elem().field();
  std::set<RatFunc> roots;
  std::size_t low = 0;
  while (g.coeff(low).is_zero() && static_cast<int>(low) < g.degree()) ++low;
  if (g.degree() <= 0) return {};
  if (low > 0) roots.insert(RatFunc(F));
  const PolyQ h(g.zero_elem(), std::vector<RatFunc>(g.coeffs().begin() + static_cast<std::ptrdiff_t>(low), g.coeffs().end()));
  if (h.degree() >= 1) {
    const std::vector<PolyA> a = primitive_part(h);
    Rng rng(0x5eedf00d);
    const auto nums = monic_divisors(F, factor(a.front().monic(), rng));
    const auto dens = monic_divisors(F, factor(a.back(), rng));
    for (const auto& n : nums)
      for (const auto& d : dens) {
        if (!gcd(n, d).is_one()) continue;
        for (FqField::Value u = 1; u < F.order(); ++u) {
          RatFunc cand(n.scaled(u), d);
          if (is_root(h, cand)) roots.insert(cand);
        }
      }
  }
  return {roots.begin(), roots.end()};
}

namespace {

std::uint64_t checked_qpow(std::uint64_t q, std::size_t i) {
  std::uint64_t r = 1;
  for (std::size_t k = 0; k < i; ++k) {
    if (r > (std::uint64_t(1) << 40) / q) fail(ErrorCode::InvalidArgument, "linearized polynomial too large");
    r *= q;
  }
  return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

std::vector<RatFunc> linearized_roots(const std::vector<RatFunc>& r) {
  if (r.empty()) fail(ErrorCode::ZeroPolynomial, "roots of the zero linearized polynomial");
  const FqField& F = r.front().field();
  const std::uint64_t q = F.order();
  const std::vector<PolyA> a = primitive_part(PolyQ(RatFunc(F), r));
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) idx.push_back(i);
  if (idx.size() < 2) return {};
  std::vector<std::uint64_t> qp;
  for (std::size_t i = 0; i < a.size(); ++i) qp.push_back(checked_qpow(q, i));
  const std::size_t i0 = idx[0], i1 = idx[1], n = idx.back(), n2 = idx[idx.size() - 2];

  // a root n/d in lowest terms has d^{q^n - q^{n2}} | a_n
  const std::uint64_t m = qp[n] - qp[n2];
  PolyA D = PolyA::constant(F, 1);
  for (const auto& [f, k] : squarefree_factorization(a[n].monic()))
    if (k / m > 0) D *= pow(f, k / m);

  // n^{q^{i1} - q^{i0}} | a_{i0}, and deg n - deg d is a slope of the Newton polygon at infinity
  std::int64_t bound = a[i0].degree() / static_cast<std::int64_t>(qp[i1] - qp[i0]);
  std::int64_t slope = INT64_MIN;
  for (std::size_t x = 0; x < idx.size(); ++x)
    for (std::size_t y = x + 1; y < idx.size(); ++y)
      slope = std::max(slope, floor_div(a[idx[x]].degree() - a[idx[y]].degree(),
                                        static_cast<std::int64_t>(qp[idx[y]] - qp[idx[x]])));
  bound = std::min(bound, slope) + D.degree();
  if (bound < 0) return {};

  // D^{q^n}·Σ a_i (n'/D)^{q^i} = Σ_j c_j Σ_i a_i T^{j q^i} D^{q^n - q^i} for n' = Σ c_j T^j
  std::vector<PolyA> w(a.size(), PolyA(F));
  for (std::size_t i : idx) w[i] = a[i] * pow(D, qp[n] - qp[i]);
  std::vector<FqVector> columns;
  for (std::int64_t j = 0; j <= bound; ++j) {
    PolyA v(F);
    for (std::size_t i : idx) v += w[i].shifted(static_cast<std::size_t>(j) * qp[i]);
    columns.push_back(v.coeffs());
  }
  std::vector<RatFunc> roots;
  for (auto& c : fq_nullspace(F, columns)) {
    RatFunc root(PolyA(F, std::move(c)), D);
    RatFunc value(F), rq = root;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i > 0) rq = rq.frobenius();
      value += r[i] * rq;
    }
    if (!value.is_zero()) fail(ErrorCode::InternalInconsistency, "linearized kernel vector is not a root");
    roots.push_back(std::move(root));
  }
  return roots;
}

}  // namespace dforge
