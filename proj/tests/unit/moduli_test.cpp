#include <dforge/moduli.hpp>
#include <dforge/tree.hpp>

#include <gtest/gtest.h>

#include "error_code.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace dforge;
using namespace dforge::testing;

namespace {

IdealA ideal(const FqField& F, std::vector<std::int64_t> c) { return IdealA(poly(F, std::move(c))); }

IdealA product_of_first_primes(const FqField& F, unsigned k) {
  const std::vector<std::vector<std::int64_t>> gens{{0, 1}, {1, 1}, {1, 0, 1}};
  IdealA n = IdealA::unit(F);
  for (unsigned i = 0; i < k; ++i) n = n * ideal(F, gens[i]);
  return n;
}

ModuliPoint two_prime_point(const ExtField& K, Rng& rng) {
  return ModuliPoint(certified(two_step_path(random_two_prescribed(K, rng, 0, 1))));
}

}  // namespace

TEST(Moduli, ALComposeExamples) {
  const auto F = FqField::prime(3);
  const IdealA T = ideal(*F, {0, 1}), T1 = ideal(*F, {1, 1});
  const IdealA n = T * T1;
  const ALElement wT(T, n), wT1(T1, n);
  EXPECT_TRUE(al_compose(wT, wT).is_identity());
  EXPECT_EQ(al_compose(wT, wT1), ALElement(n, n));
  EXPECT_EQ(al_compose(wT, wT1).m(), ideal(*F, {0, 1, 1}));
  EXPECT_EQ(code_of([&] { al_compose(wT, ALElement(T, T)); }), ErrorCode::AmbientMismatch);

  const IdealA n2 = T * T * T1;
  EXPECT_EQ(code_of([&] { ALElement(T, n2); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([&] { ALElement(ideal(*F, {2, 1}), n2); }), ErrorCode::InvalidArgument);
  const auto W = al_group(n2);
  ASSERT_EQ(W.size(), 4u);
  EXPECT_TRUE(W.front().is_identity());
  EXPECT_NE(std::find(W.begin(), W.end(), ALElement(T * T, n2)), W.end());
}

TEST(Moduli, GroupTablesAreElementaryAbelian) {
  const auto F = FqField::prime(3);
  for (unsigned k = 0; k <= 3; ++k) {
    const IdealA n = product_of_first_primes(*F, k);
    const auto W = al_group(n);
    ASSERT_EQ(W.size(), std::size_t(1) << k);
    for (const auto& a : W) {
      EXPECT_TRUE(al_compose(a, a).is_identity());
      for (const auto& b : W) {
        const ALElement ab = al_compose(a, b);
        EXPECT_EQ(ab, al_compose(b, a));
        EXPECT_NE(std::find(W.begin(), W.end(), ab), W.end());
        const IdealA g = gcd(a.m(), b.m());
        EXPECT_EQ(ab.m(), quotient(a.m() * b.m(), g * g));
        for (const auto& c : W) EXPECT_EQ(al_compose(al_compose(a, b), c), al_compose(a, al_compose(b, c)));
      }
    }
  }
}

TEST(Moduli, PointsNeedCyclicKernels) {
  Rng rng(7);
  RationalSetup Q(3);
  auto t = random_two_prescribed(*Q.K, rng, 0, 1);
  const auto& F = Q.K->fq();
  EXPECT_EQ(code_of([&] { ModuliPoint(Isogeny(t.phi, t.phi, t.phi.phi(poly(F, {0, 1})))); }), ErrorCode::NotCyclic);
  const ModuliPoint x(t.nu[0]);
  EXPECT_EQ(x.n(), ideal(F, {0, 1}));
  EXPECT_EQ(code_of([&] { al_apply(ALElement(x.n(), x.n()), x); }), ErrorCode::MissingCertificate);
  const ModuliPoint y(certified(t.nu[0]));
  EXPECT_EQ(code_of([&] { al_apply(ALElement::identity(ideal(F, {1, 1})), y); }), ErrorCode::DegreeMismatch);
}

TEST(Moduli, FullInvolutionIsTheDual) {
  Rng rng(8);
  RationalSetup Q(3);
  for (int i = 0; i < 10; ++i) {
    const ModuliPoint x = two_prime_point(*Q.K, rng);
    EXPECT_EQ(al_apply(ALElement::identity(x.n()), x).iso().mu(), x.iso().mu());
    const ModuliPoint wx = al_apply(ALElement(x.n(), x.n()), x);
    EXPECT_EQ(wx.iso().mu(), dual(x.iso()).mu());
    EXPECT_EQ(theta(wx), (ThetaPair{theta(x).j_target, theta(x).j_source}));
  }
}

TEST(Moduli, InvolutionsActOnThetaAsAGroup) {
  Rng rng(9);
  RationalSetup Q(3);
  for (int i = 0; i < 6; ++i) {
    const ModuliPoint x = two_prime_point(*Q.K, rng);
    const auto W = al_group(x.n());
    for (const auto& w : W) {
      const ModuliPoint wx = al_apply(w, x);
      ASSERT_EQ(wx.n(), x.n());
      ASSERT_EQ(theta(al_apply(w, wx)), theta(x)) << to_string(w);
      for (const auto& v : W) ASSERT_EQ(theta(al_apply(v, wx)), theta(al_apply(al_compose(v, w), x)));
    }
    // the partial involution moves the source to φ_m, the target of the m-part
    const ALElement wm(ideal(Q.K->fq(), {0, 1}), x.n());
    const SkewPoly mu_m = right_gcd(x.iso().mu(), x.iso().source().phi(wm.m().gen()));
    EXPECT_EQ(theta(al_apply(wm, x)).j_source,
              DrinfeldModule(exact_right_quotient(mu_m * x.iso().source().phiT(), mu_m)).j_invariant());
  }
}

TEST(Moduli, DoubleInvolutionIsScalarEquivalent) {
  Rng rng(10);
  RationalSetup Q(3);
  for (int i = 0; i < 4; ++i) {
    const ModuliPoint x = two_prime_point(*Q.K, rng);
    for (const auto& w : al_group(x.n())) {
      const ModuliPoint back = al_apply(w, al_apply(w, x));
      EXPECT_TRUE(scalar_equivalence(x, back).has_value()) << to_string(w);
    }
  }
}

TEST(Moduli, ThetaDeterminesTheClass) {
  Rng rng(11);
  RationalSetup Q(3);
  const auto& K = *Q.K;
  for (int i = 0; i < 10; ++i) {
    auto t = random_two_prescribed(K, rng, 0, 1);
    const ModuliPoint x(certified(t.nu[0]));
    const ExtElem u = random_nonzero(K, rng), v = random_nonzero(K, rng);
    const Isogeny moved(scalar_conjugate(x.iso().source(), u), scalar_conjugate(x.iso().target(), v),
                        x.iso().mu().right_scaled(u.inverse()).left_scaled(v.scaled(2)));
    const ModuliPoint y(moved);
    ASSERT_EQ(theta(x), theta(y));
    const auto witness = scalar_equivalence(x, y);
    ASSERT_TRUE(witness.has_value());
    const SkewPoly expected = x.iso().mu().right_scaled(witness->first.inverse()).left_scaled(witness->second);
    ASSERT_TRUE((y.iso().mu().lead() / expected.lead()).is_fq());
    // a different point of the same level is told apart
    const ModuliPoint z(certified(t.nu[1]));
    EXPECT_FALSE(scalar_equivalence(x, z).has_value());
  }
}

TEST(Moduli, StarOrbitExample35) {
  const Example35 ex(3);
  const ModuliPoint x(certified(Isogeny(ex.sphi, ex.phi, ex.mu)));
  EXPECT_EQ(theta(x), (ThetaPair{conjugate_module(ex.S.galois, ex.S.s(), ex.phi).j_invariant(), ex.expected_j()}));
  const StarOrbit orbit = star_orbit(x, &ex.S.galois);
  EXPECT_EQ(orbit.size, 2u);
  EXPECT_FALSE(orbit.cm);
  const IdealA T = ideal(*ex.S.fq, {0, 1});
  EXPECT_EQ(orbit.m_map.at(ex.S.s()), ALElement(T, T));
  EXPECT_TRUE(orbit.m_map.at(ex.S.galois.identity()).is_identity());
  const auto descent = descent_data(orbit);
  EXPECT_EQ(descent.image_order, 2u);
  EXPECT_EQ(descent.bound, 2u);

  EXPECT_TRUE(is_central(ex.phi, {Isogeny(ex.sphi, ex.phi, ex.mu)}, T));
  EXPECT_FALSE(is_central(ex.phi, {Isogeny(ex.sphi, ex.phi, ex.mu)}, ideal(*ex.S.fq, {1, 1})));
  const Isogeny scalar(ex.phi, ex.phi, SkewPoly::constant(ex.S.K->from_fq(2)));
  EXPECT_TRUE(is_central(ex.phi, {scalar}, ideal(*ex.S.fq, {1, 1})));
}

TEST(Moduli, StarOrbitOfGenericPoints) {
  Rng rng(12);
  RationalSetup Q(3);
  auto t = random_two_prescribed(*Q.K, rng, 0, 1);
  const StarOrbit one = star_orbit(ModuliPoint(certified(t.nu[0])));
  EXPECT_EQ(one.size, 2u);
  EXPECT_EQ(one.stabilizer.size(), 1u);
  const StarOrbit two = star_orbit(two_prime_point(*Q.K, rng));
  EXPECT_EQ(two.size, 4u);
  EXPECT_EQ(code_of([&] { descent_data(two); }), ErrorCode::InvalidArgument);
  const auto trivial = descent_data(GaloisDatum::trivial(Q.K), {{GroupElem{}, ALElement::identity(two.base.n())}}, {});
  EXPECT_EQ(trivial.bound, 1u);
}

TEST(Moduli, ComplexMultiplicationShrinksTheOrbit) {
  auto fq = FqField::prime(3);
  const auto& F = *fq;
  auto K = ExtField::create(fq, {-rat(F, {0, 1}), RatFunc(F), RatFunc::constant(F, 1)});
  const ExtElem S = K->gen();
  const SkewPoly psiS = skew(*K, {S, K->one()});
  const DrinfeldModule phi(psiS * psiS);
  const ModuliPoint x(certified(Isogeny(phi, phi, psiS)));
  EXPECT_EQ(x.n(), ideal(F, {0, 1}));
  const StarOrbit orbit = star_orbit(x);
  EXPECT_TRUE(orbit.cm);
  EXPECT_EQ(orbit.size, 1u);
  EXPECT_EQ(orbit.stabilizer.size(), 2u);
}

TEST(Moduli, EvenCharacteristicIsRefused) {
  Rng rng(13);
  RationalSetup Q(2);
  auto r = random_rotation(*Q.K, rng, 1);
  const ModuliPoint x(certified(Isogeny(r.phi, r.psi, r.mu2)));
  EXPECT_EQ(code_of([&] { star_orbit(x); }), ErrorCode::EvenCharacteristicUnsupported);
}

TEST(Moduli, DescentOverBiquadraticPresentation) {
  auto fq = FqField::prime(3);
  const auto& F = *fq;
  const auto K = oracle::biquadratic_field(fq);
  const GaloisDatum G = oracle::biquadratic_galois(K);
  const IdealA p = ideal(F, {0, 1}), r = ideal(F, {1, 1}), n = p * r;
  const GroupElem a = G.generator(0), b = G.generator(1);
  std::map<GroupElem, ALElement> m{{G.identity(), ALElement::identity(n)},
                                   {a, ALElement(p, n)},
                                   {b, ALElement(r, n)},
                                   {G.compose(a, b), ALElement(n, n)}};
  const auto both = descent_data(G, m, {ALElement::identity(n)});
  EXPECT_EQ(both.image_order, 4u);
  EXPECT_EQ(both.bound, 4u);
  // modulo a stabilizer containing w_p only the r-part survives
  const auto shrunk = descent_data(G, m, {ALElement::identity(n), ALElement(p, n)});
  EXPECT_EQ(shrunk.bound, 2u);
  m.insert_or_assign(G.compose(a, b), ALElement(p, n));
  EXPECT_EQ(code_of([&] { descent_data(G, m, {ALElement::identity(n)}); }), ErrorCode::NotAHomomorphism);
}

TEST(Moduli, CenterOfExample35GivesAGStablePoint) {
  const Example35 ex(3);
  const Isogeny mu = certified(Isogeny(ex.sphi, ex.phi, ex.mu));
  const auto d = orbit_from_isogenies({ex.phi, ex.sphi}, {{{1, 0}, mu}}, ex.S.galois);
  const auto r = classify(d);
  const auto c = materialize_center(d, r);
  const ModuliPoint x(c.iso);
  const StarOrbit orbit = star_orbit(x, &ex.S.galois);
  EXPECT_EQ(orbit.m_map.at(ex.S.s()).m(), r.m.at(ex.S.s()));
}
