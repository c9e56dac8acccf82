// Acceptance gate: one PASS/FAIL line per criterion. Every comparison is
// exact; the only tolerances are the wall-clock budgets below.

#include <dforge/errors.hpp>
#include <dforge/isogeny.hpp>
#include <dforge/moduli.hpp>
#include <dforge/text.hpp>
#include <dforge/tree.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "generators.hpp"
#include "tree_support.hpp"

using namespace dforge;
using namespace dforge::testing;

namespace {

struct Failure {
  std::string what;
};

void check(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

template <class... Args>
std::string str(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

PolyA linear(const FqField& F, std::int64_t c) { return poly(F, {-c, 1}); }

bool scalar_multiple(const SkewPoly& a, const SkewPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const ExtElem c = a.lead() / b.lead();
  return c.is_fq() && a == b.left_scaled(c);
}

// 1. The worked example at q = 3 and q = 5.
std::string example35() {
  for (std::uint32_t p : {3u, 5u}) {
    const Example35 ex(p);
    const auto& K = *ex.S.K;
    const std::string at = str("q=", p, ": ");
    check(ex.mu * ex.sphi.phiT() == ex.phi.phiT() * ex.mu, at + "mu does not intertwine sphi and phi");
    check(ex.sphi.phiT() == ex.eta * ex.mu, at + "sphi_T != eta*mu");
    const ExtElem j = ex.phi.j_invariant();
    check(j == ex.expected_j(), at + "j differs from -(2 + a - a^q)^(q+1)");
    check(!j.coord(1).is_zero(), at + "j lies in Q");
    const Isogeny mu(ex.sphi, ex.phi, ex.mu), eta(ex.phi, ex.sphi, ex.eta);
    const IdealA T(linear(K.fq(), 0));
    check(mu.degree().degree == T && eta.degree().degree == T, at + "deg mu or deg eta is not (T)");
    check(scalar_multiple(dual(mu).mu(), ex.eta), at + "dual(mu) is not a scalar multiple of eta");
    const auto orbit = orbit_from_isogenies({ex.phi, ex.sphi}, {{{1, 0}, certified(mu)}}, ex.S.galois);
    const auto r = classify(orbit);
    check(r.n == T, at + "n != (T)");
    check(r.m.at(ex.S.s()) == T, at + "m_s != (T)");
    check(minimality_check(orbit, r).ok, at + "minimality fails");
  }
  return "q=3,5: 5 checks each";
}

// 2. Right division round trips.
std::string skew_division() {
  Rng rng(2);
  std::size_t total = 0;
  for (std::uint32_t d : {1u, 2u}) {
    const RationalSetup Q(3, d);
    const QuadraticSetup S(3, d);
    for (const ExtField* K : {Q.K.get(), S.K.get()}) {
      const int max_a = d == 1 ? 5 : 3, max_b = d == 1 ? 3 : 2;
      for (int i = 0; i < 1000; ++i, ++total) {
        const int da = std::uniform_int_distribution<int>(0, max_a)(rng);
        const int db = std::uniform_int_distribution<int>(0, max_b)(rng);
        const SkewPoly a = SkewPoly::random(*K, rng, da, 2, 1);
        const SkewPoly b = SkewPoly::random(*K, rng, db, 2, 1);
        const auto [q, r] = right_divmod(a, b);
        check(q * b + r == a, str("reconstruction fails at q=", K->fq().order(), " e=", K->degree(), " trial ", i));
        check(r.is_zero() || r.degree() < b.degree(), "remainder degree not below the divisor's");
      }
    }
  }
  return str(total, " divisions over Q and Q(sqrt(T+1)), q=3,9");
}

void check_dual(const Isogeny& mu, const std::string& at) {
  const Isogeny eta = dual(mu);
  const PolyA a = mu.degree().degree.gen();
  check(eta.mu() * mu.mu() == mu.source().phi(a), at + "dual(mu)*mu != phi_a");
  check(mu.mu() * eta.mu() == mu.target().phi(a), at + "mu*dual(mu) != psi_a");
  check(eta.degree().degree == mu.degree().degree, at + "deg dual != deg mu");
}

// 3. Degree multiplicativity and the dual relations along generated chains.
std::string chains() {
  Rng rng(3);
  int n = 0;
  for (std::uint32_t p : {3u, 5u}) {
    const RationalSetup Q(p);
    const QuadraticSetup S(p);
    for (int i = 0; i < 50; ++i) {
      for (const ExtField* K : {Q.K.get(), S.K.get()}) {
        const std::string at = str("p=", p, " e=", K->degree(), " chain ", i, ": ");
        const auto c = K->fq().from_int(std::int64_t(i % p));
        const auto r = random_rotation(*K, rng, c);
        const Isogeny m2(r.phi, r.psi, r.mu2), m1(r.psi, r.phi, r.mu1);
        const IdealA P(linear(K->fq(), i % p));
        check(m1.degree().degree == P && m2.degree().degree == P, at + "rotation factor degree");
        // the three-step chain φ → ψ → φ → ψ
        const Isogeny loop = compose(m1, m2), three = compose(m2, loop);
        check(loop.degree().degree == P * P, at + "deg(mu1 mu2) != deg mu1 * deg mu2");
        check(three.degree().degree == P * P * P, at + "degree of the three-step chain");
        check(loop.mu() == r.phi.phi(P.gen()), at + "mu1 mu2 != phi_{T-c}");
        check(dual(m2).mu() == r.mu1, at + "dual(mu2) != mu1");
        check_dual(m2, at);
        check_dual(loop, at);
        ++n;
      }
    }
  }
  return str(n, " rotation chains");
}

// 4. Scalar ratios between isogenies of equal degree, and Θ-injectivity.
std::string scalar_ratio() {
  Rng rng(4);
  const RationalSetup Q(3);
  const auto& K = *Q.K;
  int equal = 0, distinct = 0;
  for (int i = 0; i < 100; ++i) {
    const std::string at = str("pair ", i, ": ");
    const auto r = random_rotation(K, rng, K.fq().from_int(i % 3));
    const Isogeny mu = certified(Isogeny(r.phi, r.psi, r.mu2));
    // every isogeny φ → ψ of τ-degree <= 1 is an F_q-multiple of μ
    const auto found = find_isogenies(r.phi, r.psi, 1);
    check(found.completeness == SearchCompleteness::Complete, at + "incomplete search over Q");
    check(found.basis.size() == 1 && scalar_multiple(found.basis[0].mu(), mu.mu()), at + "isogeny space is not F_q mu");

    // y = v μ u^{-1} between the scalar conjugates of φ and ψ
    const ExtElem u = random_nonzero(K, rng), v = random_nonzero(K, rng);
    const DrinfeldModule phi_u = scalar_conjugate(r.phi, u), psi_v = scalar_conjugate(r.psi, v);
    const ExtElem c = K.from_fq(K.fq().from_int(1 + i % 2));
    const SkewPoly nu = mu.mu().right_scaled(u.inverse()).left_scaled(v * c);
    const ModuliPoint x(mu), y(Isogeny(phi_u, psi_v, nu));
    check(theta(x) == theta(y), at + "Θ changed under scalar conjugation");
    const auto by_search = find_isogenies(r.phi, phi_u, 0).basis;
    check(by_search.size() == 1, at + "no degree-0 isogeny to the conjugate source");
    const auto w = scalar_equivalence(x, y);
    check(w.has_value(), at + "equal Θ without a scalar witness");
    check(scalar_multiple(SkewPoly::constant(w->first), by_search[0].mu()), at + "witness u disagrees with the search");
    const SkewPoly moved = x.iso().mu().right_scaled(w->first.inverse()).left_scaled(w->second);
    check(scalar_multiple(y.iso().mu(), moved), at + "y.mu is not c v mu u^{-1}");
    ++equal;

    const auto other = random_rotation(K, rng, K.fq().from_int(i % 3));
    const ModuliPoint z(Isogeny(other.phi, other.psi, other.mu2));
    if (!(theta(z) == theta(x))) {
      check(!scalar_equivalence(x, z), at + "witness between points with different Θ");
      ++distinct;
    }
  }
  check(distinct >= 90, "too few distinct control pairs");
  return str(equal, " equivalent pairs, ", distinct, " separated controls");
}

// 5. Tree reconstruction and centers against brute force.
std::string tree_oracles() {
  Rng rng(5);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 40)(rng);
    const Tree t = oracle::random_tree(rng, n);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, n)(rng);
    std::vector<std::size_t> labels;
    for (std::size_t i = 0; i < k; ++i) labels.push_back(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
    const auto spanned = oracle::spanned_subtree(t, labels);
    const auto rebuilt = realize_metric(oracle::label_metric(spanned));
    check(oracle::labeled_canonical_form(rebuilt.tree, rebuilt.label_vertex) ==
              oracle::labeled_canonical_form(spanned.tree, spanned.label_vertex),
          str("reconstruction differs at trial ", trial));
  }
  for (int trial = 0; trial < 10000; ++trial) {
    SubTree st;
    st.tree = oracle::random_tree(rng, std::uniform_int_distribution<std::size_t>(1, 40)(rng));
    const Center c = tree_center(st);
    const auto e = oracle::pruning_center(st.tree);
    const Center expected = e.size() == 1 ? Center{false, e[0], e[0]} : Center{true, e[0], e[1]};
    check(c == expected, str("center differs at trial ", trial));
  }
  return "10000 reconstructions, 10000 centers";
}

// 6. Classification of synthetic orbits.
std::string synthetic_orbits() {
  const auto F = FqField::prime(3);
  const std::vector<PrimeIdealA> primes{IdealA(poly(*F, {0, 1})), IdealA(poly(*F, {1, 1})), IdealA(poly(*F, {1, 0, 1}))};
  Rng rng(6);
  int nontrivial = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::string at = str("orbit ", trial, ": ");
    const auto orbit = random_synthetic_orbit(F, rng, primes);
    const auto r = classify(orbit.datum);
    nontrivial += !r.n.is_unit();
    check(r.n.is_squarefree(), at + "n is not square-free");
    check(r.n == orbit.expected_n && r.m == orbit.expected_m, at + "n or m differs from the construction");
    check(minimality_check(orbit.datum, r).ok, at + "minimality fails");
    for (const auto& [s, ms] : r.m)
      for (const auto& [t, mt] : r.m) {
        const IdealA g = gcd(ms, mt);
        check(r.m.at(orbit_compose(orbit.datum, s, t)) == quotient(ms * mt, g * g), at + "m violates the composition law");
      }
    const std::size_t size = orbit.datum.labels.size();
    if (size > 1) {
      std::vector<std::size_t> perm(size);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      if (perm[0] == 0) std::swap(perm[0], perm[1]);
      const auto rebased = classify(relabel(orbit.datum, perm));
      check(rebased.n == r.n && rebased.m == r.m, at + "re-basing changes the result");
    }
  }
  return str("500 orbits, ", nontrivial, " with n != (1)");
}

// 7. Atkin-Lehner group tables and the full involution on points.
std::string atkin_lehner() {
  const auto F = FqField::prime(3);
  const IdealA T(poly(*F, {0, 1})), T1(poly(*F, {1, 1})), S(poly(*F, {1, 0, 1}));
  const std::vector<IdealA> levels{T, T * T * T1, T * T1 * T1 * S};
  for (const IdealA& n : levels) {
    const auto primes = n.prime_factors();
    const auto W = al_group(n);
    check(W.size() == (std::size_t(1) << primes.size()), str("#W", n, " != 2^k"));
    // oracle: w_m ↔ the set of primes of m, composition ↔ symmetric difference
    auto mask = [&](const ALElement& w) {
      unsigned b = 0;
      for (std::size_t i = 0; i < primes.size(); ++i)
        if (divides(primes[i], w.m())) b |= 1u << i;
      return b;
    };
    auto from_mask = [&](unsigned b) {
      IdealA m = IdealA::unit(*F);
      for (std::size_t i = 0; i < primes.size(); ++i)
        if (b >> i & 1)
          for (unsigned e = n.valuation(primes[i]); e > 0; --e) m = m * primes[i];
      return ALElement(m, n);
    };
    for (const auto& a : W) {
      check(al_compose(a, a).is_identity(), str(to_string(a), " is not an involution"));
      for (const auto& b : W) {
        const ALElement ab = al_compose(a, b);
        check(ab == al_compose(b, a), "W(n) is not commutative");
        check(ab == from_mask(mask(a) ^ mask(b)), str(to_string(a), "*", to_string(b), " != ", to_string(ab)));
        const IdealA g = gcd(a.m(), b.m());
        check(ab.m() == quotient(a.m() * b.m(), g * g), "composition formula");
      }
    }
  }
  Rng rng(7);
  const RationalSetup Q(3);
  const QuadraticSetup Sq(3);
  int points = 0;
  for (int i = 0; i < 25; ++i)
    for (const ExtField* K : {Q.K.get(), Sq.K.get()}) {
      const auto t = random_two_prescribed(*K, rng, 0, 1);
      const ModuliPoint x(certified(two_step_path(t)));
      const ModuliPoint wx = al_apply(ALElement(x.n(), x.n()), x);
      const ThetaPair th = theta(x);
      check(theta(wx) == ThetaPair{th.j_target, th.j_source}, str("point ", i, ": Θ(w_n x) is not swapped"));
      check(theta(wx) == theta(ModuliPoint(dual(x.iso()))), str("point ", i, ": w_n x differs from the dual"));
      ++points;
    }
  return str("levels with 1, 2, 3 primes; ", points, " points");
}

// 8. Weil descent of scalar twists over a quadratic extension.
std::string descent() {
  Rng rng(8);
  int n = 0;
  for (std::uint32_t p : {3u, 5u}) {
    const QuadraticSetup S(p);
    const auto& K = *S.K;
    for (int i = 0; i < 25; ++i) {
      const std::string at = str("p=", p, " twist ", i, ": ");
      const ExtElem g = K.from_rat(RatFunc::random(K.fq(), rng, 2, 1));
      ExtElem d = K.zero();
      while (d.is_zero()) d = K.from_rat(RatFunc::random(K.fq(), rng, 2, 1));
      const DrinfeldModule base(skew(K, {K.T(), g, d}));
      ExtElem c = K.zero();
      while (c.is_zero() || c.is_rational()) c = random_nonzero(K, rng);
      const DrinfeldModule twisted = scalar_conjugate(base, c);
      const auto model = descend_k_model(twisted, S.galois, coboundary(S.galois, c), rng);
      for (const auto& coeff : model.model.phiT().coeffs())
        for (const auto& s : S.galois.elements())
          check(S.galois.apply(s, coeff) == coeff, at + "model coefficient not Galois-fixed");
      check(model.model.j_invariant() == twisted.j_invariant(), at + "j changed");
      check(model.model.j_invariant() == base.j_invariant(), at + "j differs from the untwisted module");
      check(scalar_conjugate(twisted, model.nu) == model.model, at + "nu does not carry phi to the model");
      ++n;
    }
  }
  return str(n, " twists");
}

struct Criterion {
  int id;
  const char* name;
  std::string (*run)();
  double budget_s;
};

}  // namespace

// With arguments, only the listed criterion numbers run.
int main(int argc, char** argv) {
  const Criterion criteria[] = {
      {1, "worked example end-to-end", example35, 5},
      {2, "skew right-division round trips", skew_division, 30},
      {3, "degree multiplicativity and duals", chains, 60},
      {4, "scalar ratio and theta-injectivity", scalar_ratio, 60},
      {5, "tree reconstruction and centers", tree_oracles, 60},
      {6, "synthetic orbit classification", synthetic_orbits, 60},
      {7, "atkin-lehner algebra", atkin_lehner, 60},
      {8, "weil descent of twists", descent, 60},
  };
  int failed = 0;
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.budget_s) {
      ok = false;
      detail += " (over the time budget)";
    }
    failed += !ok;
    std::printf("%s %d %s: %s [%.2f s / %.0f s]\n", ok ? "PASS" : "FAIL", c.id, c.name, detail.c_str(), secs, c.budget_s);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
