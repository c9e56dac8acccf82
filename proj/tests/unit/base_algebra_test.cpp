#include <gtest/gtest.h>

#include <dforge/errors.hpp>
#include <dforge/factor.hpp>
#include <dforge/ideal.hpp>
#include <dforge/rational_roots.hpp>

#include <algorithm>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dforge;
using namespace dforge::testing;

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

TEST(Fq, PrimeFieldExamples) {
  auto F = FqField::prime(3);
  EXPECT_EQ(F->add(2, 2), 1u);
  EXPECT_EQ(F->mul(2, 2), 1u);
  EXPECT_EQ(F->inv(1), 1u);
  EXPECT_THROW(F->inv(0), Error);
}

TEST(Fq, RejectsBadModulus) {
  EXPECT_THROW(FqField::create(3, {1, 0, 1, 1}), Error);  // y^3 + y^2 + 1 has the root 1
  EXPECT_THROW(FqField::create(4, {0, 1}), Error);
  EXPECT_THROW(FqField::create(3, {2, 0, 1}), Error);  // y^2 - 1 reducible
  EXPECT_NO_THROW(FqField::create(3, {1, 0, 1}));       // y^2 + 1 irreducible over F_3
}

TEST(Fq, FieldAxiomsOnRandomTriples) {
  Rng rng(11);
  for (auto [p, d] : {std::pair{3u, 1u}, {3u, 2u}, {2u, 3u}, {5u, 2u}, {7u, 1u}}) {
    auto F = FqField::with_degree(p, d);
    for (int i = 0; i < 1000; ++i) {
      FqElem a(*F, F->random(rng)), b(*F, F->random(rng)), c(*F, F->random(rng));
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_TRUE((a - a).is_zero());
      if (!a.is_zero()) EXPECT_EQ((a * a.inverse()).value(), 1u);
      EXPECT_EQ(F->pow(a.value(), F->order()), a.value());
    }
  }
}

TEST(Fq, CoordinateArithmeticMatchesPolynomialModel) {
  // F_9 = F_3[y]/(y^2+1): (1+y)(2+y) = 2 + 3y + y^2 = 1 + 0y
  auto F = FqField::create(3, {1, 0, 1});
  const std::uint32_t a[] = {1, 1}, b[] = {2, 1};
  auto prod = F->coords(F->mul(F->from_coords(a), F->from_coords(b)));
  EXPECT_EQ(prod, (std::vector<std::uint32_t>{1, 0}));
}

TEST(PolyA, DivmodExamples) {
  auto F = FqField::prime(3);
  auto [q1, r1] = divmod(poly(*F, {1, 0, 1}), poly(*F, {0, 1}));
  EXPECT_EQ(q1, poly(*F, {0, 1}));
  EXPECT_EQ(r1, poly(*F, {1}));
  auto [q2, r2] = divmod(poly(*F, {0, 1}), poly(*F, {0, 0, 1}));
  EXPECT_TRUE(q2.is_zero());
  EXPECT_EQ(r2, poly(*F, {0, 1}));
  EXPECT_THROW(divmod(poly(*F, {1}), PolyA(*F)), Error);
  EXPECT_EQ(PolyA(*F).degree(), -1);
}

TEST(PolyA, DivmodReconstructs) {
  Rng rng(5);
  auto F = FqField::with_degree(3, 2);
  for (int i = 0; i < 500; ++i) {
    PolyA a = PolyA::random(*F, rng, 12), b = PolyA::random(*F, rng, 6);
    if (b.is_zero()) continue;
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST(Factor, SpecExamples) {
  auto F = FqField::prime(3);
  Rng rng(1);
  auto f1 = factor_ideal(IdealA(poly(*F, {0, 2, 1})), rng);
  ASSERT_EQ(f1.size(), 2u);
  EXPECT_EQ(f1[0], (PrimePower{poly(*F, {0, 1}), 1}));
  EXPECT_EQ(f1[1], (PrimePower{poly(*F, {2, 1}), 1}));

  auto f2 = factor_ideal(IdealA(poly(*F, {0, 0, 1})), rng);
  ASSERT_EQ(f2.size(), 1u);
  EXPECT_EQ(f2[0], (PrimePower{poly(*F, {0, 1}), 2}));

  const PolyA t2p1 = poly(*F, {1, 0, 1});
  auto f3 = factor_ideal(IdealA(t2p1), rng);
  ASSERT_EQ(f3.size(), 1u);
  EXPECT_EQ(f3[0], (PrimePower{t2p1, 1}));
  EXPECT_TRUE(oracle::irreducible_by_trial_division(t2p1));
  EXPECT_THROW(IdealA(PolyA(*F)), Error);
}

TEST(Factor, RandomPolynomialsRemultiplyAndIrreducible) {
  Rng rng(77);
  for (auto [p, d] : {std::pair{3u, 1u}, {2u, 1u}, {3u, 2u}, {5u, 1u}, {2u, 2u}}) {
    auto F = FqField::with_degree(p, d);
    for (int i = 0; i < 150; ++i) {
      PolyA a = PolyA::random_monic(*F, rng, 1 + static_cast<int>(rng() % 9));
      // plant repeated and p-th power factors now and then
      if (i % 3 == 0) a = a * a;
      if (i % 5 == 0) a = a * PolyA::T(*F).frobenius();
      auto fs = factor(a, rng);
      PolyA prod = PolyA::constant(*F, 1);
      for (const auto& f : fs) {
        EXPECT_TRUE(f.prime.is_monic());
        EXPECT_TRUE(is_irreducible(f.prime));
        EXPECT_TRUE(oracle::irreducible_by_trial_division(f.prime)) << str(f.prime);
        prod = prod * pow(f.prime, f.multiplicity);
      }
      EXPECT_EQ(prod, a);
      Rng again(1234);
      Rng other(4321);
      EXPECT_EQ(factor(a, again), factor(a, other));
    }
  }
}

TEST(Ideal, Arithmetic) {
  auto F = FqField::prime(3);
  IdealA a(poly(*F, {0, 2}));  // (2T) = (T)
  EXPECT_EQ(a.gen(), poly(*F, {0, 1}));
  IdealA b(poly(*F, {0, 1, 1}));
  EXPECT_EQ(gcd(a, b), a);
  EXPECT_EQ(lcm(a, b), b);
  EXPECT_EQ(quotient(b, a), IdealA(poly(*F, {1, 1})));
  EXPECT_THROW(quotient(a, b), Error);
  EXPECT_EQ(str(a), "(T)");
  EXPECT_EQ(b.valuation(a), 1u);
  EXPECT_TRUE(b.is_squarefree());
}

TEST(RatFunc, CanonicalForm) {
  Rng rng(3);
  auto F = FqField::with_degree(3, 2);
  for (int i = 0; i < 1000; ++i) {
    RatFunc a = RatFunc::random(*F, rng, 4, 3), b = RatFunc::random(*F, rng, 4, 3);
    if (b.is_zero()) continue;
    RatFunc c = a * b / b;
    EXPECT_EQ(c, a);
    EXPECT_TRUE(c.den().is_monic());
    EXPECT_TRUE(gcd(c.num(), c.den()).is_one());
  }
  EXPECT_THROW(RatFunc(poly(*F, {1}), PolyA(*F)), Error);
  EXPECT_EQ(RatFunc(poly(*F, {0, 2}), poly(*F, {0, 0, 2})), RatFunc(poly(*F, {1}), poly(*F, {0, 1})));
}

TEST(RatFunc, FieldAxioms) {
  Rng rng(4);
  auto F = FqField::prime(5);
  for (int i = 0; i < 1000; ++i) {
    RatFunc a = RatFunc::random(*F, rng, 3, 2), b = RatFunc::random(*F, rng, 3, 2), c = RatFunc::random(*F, rng, 3, 2);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
    EXPECT_EQ(a.frobenius(), a.pow(5));
  }
}

TEST(ExtField, FrobeniusExamples) {
  QuadraticSetup S(3);
  const ExtField& K = *S.K;
  const FqField& F = *S.fq;
  // α^3 = (T+1)α
  EXPECT_EQ(S.alpha().frobenius(), S.alpha().scaled(rat(F, {1, 1})));
  EXPECT_EQ(K.T().frobenius(), K.from_rat(rat(F, {0, 0, 0, 1})));
  for (FqField::Value c = 0; c < F.order(); ++c) EXPECT_EQ(K.from_fq(c).frobenius(), K.from_fq(c));
}

TEST(ExtField, FieldAxiomsAndFrobenius) {
  Rng rng(21);
  for (unsigned d : {1u, 2u}) {
    QuadraticSetup S(3, d);
    const ExtField& K = *S.K;
    for (int i = 0; i < 1000; ++i) {
      ExtElem a = K.random(rng, 2, 1), b = K.random(rng, 2, 1), c = K.random(rng, 2, 1);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
      if (i % 10 == 0) {
        EXPECT_EQ(a.frobenius(), a.pow_u(K.fq().order()));
        EXPECT_EQ((a + b).frobenius(), a.frobenius() + b.frobenius());
        EXPECT_EQ((a * b).frobenius(), a.frobenius() * b.frobenius());
      }
    }
  }
}

TEST(ExtField, ReducibleModulusDetected) {
  auto F = FqField::prime(3);
  // x^2 - T^2 has the root T
  EXPECT_THROW(ExtField::create(F, {-rat(*F, {0, 0, 1}), RatFunc(*F), RatFunc::constant(*F, 1)}), Error);
}

TEST(Galois, AutomorphismExamples) {
  QuadraticSetup S(3);
  const ExtField& K = *S.K;
  const FqField& F = *S.fq;
  EXPECT_EQ(S.galois.apply(S.s(), S.alpha() + K.one()), -S.alpha() + K.one());
  EXPECT_EQ(S.galois.apply(S.s(), K.T()), K.T());
  EXPECT_THROW(GaloisDatum(S.K, {GaloisGenerator{"s", S.alpha() + K.one(), 2}}), Error);
  EXPECT_THROW(GaloisDatum(S.K, {GaloisGenerator{"s", S.alpha(), 2}}), Error);  // wrong order
  (void)F;
}

TEST(Galois, HomomorphismOnRandomPairs) {
  Rng rng(8);
  QuadraticSetup S(5);
  const ExtField& K = *S.K;
  for (int i = 0; i < 1000; ++i) {
    ExtElem a = K.random(rng, 2, 1), b = K.random(rng, 2, 1);
    const auto s = S.s();
    EXPECT_EQ(S.galois.apply(s, a + b), S.galois.apply(s, a) + S.galois.apply(s, b));
    EXPECT_EQ(S.galois.apply(s, a * b), S.galois.apply(s, a) * S.galois.apply(s, b));
    EXPECT_EQ(S.galois.apply(s, S.galois.apply(s, a)), a);
  }
}

TEST(Galois, BiquadraticGroup) {
  auto F = FqField::prime(3);
  auto K = oracle::biquadratic_field(F);
  GaloisDatum G = oracle::biquadratic_galois(K);
  EXPECT_EQ(G.group_order(), 4u);
  EXPECT_FALSE(G.is_cyclic());
  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    ExtElem a = K->random(rng, 1, 1), b = K->random(rng, 1, 1);
    for (const auto& g : G.elements()) {
      EXPECT_EQ(G.apply(g, a * b), G.apply(g, a) * G.apply(g, b));
      EXPECT_EQ(G.apply(g, G.apply(g, a)), a);
    }
  }
}

TEST(RationalRoots, Examples) {
  RationalSetup S(3);
  const FqField& F = *S.fq;
  const RatFunc zero(F);
  // x^2 - T^2
  PolyQ g1(zero, {-rat(F, {0, 0, 1}), zero, rat(F, {1})});
  auto r1 = rational_roots(g1);
  ASSERT_EQ(r1.size(), 2u);
  EXPECT_TRUE((r1[0] == rat(F, {0, 1}) && r1[1] == rat(F, {0, 2})) || (r1[1] == rat(F, {0, 1}) && r1[0] == rat(F, {0, 2})));
  PolyQ g2(zero, {-rat(F, {0, 1}), zero, rat(F, {1})});
  EXPECT_TRUE(rational_roots(g2).empty());
  EXPECT_THROW(rational_roots(PolyQ(zero)), Error);
}

TEST(RationalRoots, PlantedRootsAgreeWithDivisorOracle) {
  Rng rng(99);
  for (auto [p, d] : {std::pair{3u, 1u}, {5u, 1u}, {3u, 2u}}) {
    RationalSetup S(p, d);
    const FqField& F = *S.fq;
    const RatFunc zero(F);
    for (int i = 0; i < 60; ++i) {
      RatFunc r1 = RatFunc::random(F, rng, 3, 2), r2 = RatFunc::random(F, rng, 3, 2);
      const PolyQ x = PolyQ::x(zero);
      // x^2 - c*T has no root in Q: odd valuation at T
      PolyQ irr(zero, {-RatFunc(PolyA::monomial(F, F.random_nonzero(rng), 1)), zero, zero.one_like()});
      PolyQ g = (x - PolyQ::constant(r1)) * (x - PolyQ::constant(r2)) * irr;
      if (i % 4 == 0) g = g * (x - PolyQ::constant(r1));
      g = g.scaled(RatFunc::random(F, rng, 2, 2) + zero.one_like());
      if (g.is_zero()) continue;
      auto roots = rational_roots(g);
      std::vector<RatFunc> expect{r1, r2};
      std::sort(expect.begin(), expect.end());
      expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
      EXPECT_EQ(roots, expect);
      EXPECT_EQ(roots, rational_roots_by_divisors(g));
    }
  }
}

TEST(RationalRoots, InseparableAndRepeated) {
  RationalSetup S(3);
  const FqField& F = *S.fq;
  const RatFunc zero(F);
  const PolyQ x = PolyQ::x(zero);
  // (x - T)^3 = x^3 - T^3
  PolyQ g(zero, {-rat(F, {0, 0, 0, 1}), zero, zero, zero.one_like()});
  EXPECT_EQ(rational_roots(g), std::vector<RatFunc>{rat(F, {0, 1})});
  // x^3 - T has no root
  PolyQ h(zero, {-rat(F, {0, 1}), zero, zero, zero.one_like()});
  EXPECT_TRUE(rational_roots(h).empty());
  // x (x - 1/T)^4
  PolyQ k = x * oracle::power(x - PolyQ::constant(rat(F, {1}, {0, 1})), 4);
  EXPECT_EQ(rational_roots(k), (std::vector<RatFunc>{zero, rat(F, {1}, {0, 1})}));
}

namespace {

// Σ r_i x^{q^i} for a skew polynomial over Q whose kernel contains the given roots
std::vector<RatFunc> linearized_with_roots(const ExtField& K, const std::vector<ExtElem>& roots, Rng& rng) {
  SkewPoly P = SkewPoly::constant(K.one());
  const std::uint32_t q = K.fq().order();
  for (const auto& c : roots) {
    const ExtElem v = P.eval(c);
    if (v.is_zero()) continue;
    P = (SkewPoly::tau(K) - SkewPoly::constant(v.pow_u(q - 1))) * P;
  }
  P = SkewPoly::random(K, rng, static_cast<int>(rng() % 2), 1, 1) * P;
  std::vector<RatFunc> r;
  for (const auto& c : P.coeffs()) r.push_back(c.coord(0));
  return r;
}

}  // namespace

TEST(RationalRoots, LinearizedKernelMatchesGenericRootFinder) {
  Rng rng(17);
  for (std::uint32_t p : {2u, 3u}) {
    RationalSetup Q(p);
    const auto& K = *Q.K;
    const std::uint64_t q = K.fq().order();
    for (int i = 0; i < 40; ++i) {
      std::vector<ExtElem> planted;
      const int k = 1 + static_cast<int>(rng() % 2);
      for (int j = 0; j < k; ++j) planted.push_back(K.from_rat(RatFunc::random(K.fq(), rng, 2, 1)));
      const auto r = linearized_with_roots(K, planted, rng);
      const auto basis = linearized_roots(r);

      // generic route: roots of Σ r_i x^{q^i - 1}
      std::vector<RatFunc> dense;
      std::uint64_t qi = 1;
      for (std::size_t t = 0; t < r.size(); ++t, qi *= q) {
        dense.resize(qi, RatFunc(K.fq()));
        dense[qi - 1] = r[t];
      }
      auto generic = rational_roots(PolyQ(RatFunc(K.fq()), dense));
      std::erase_if(generic, [](const RatFunc& x) { return x.is_zero(); });
      std::uint64_t span = 1;
      for (std::size_t t = 0; t < basis.size(); ++t) span *= q;
      ASSERT_EQ(generic.size() + 1, span) << "i=" << i;
      for (const auto& c : planted) {
        if (c.is_zero()) continue;
        ASSERT_TRUE(std::find(generic.begin(), generic.end(), c.coord(0)) != generic.end());
      }
      for (const auto& b : basis) ASSERT_TRUE(std::find(generic.begin(), generic.end(), b) != generic.end());
    }
  }
}
