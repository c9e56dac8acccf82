#include <gtest/gtest.h>

#include <dforge/errors.hpp>
#include <dforge/skew_poly.hpp>

#include <sstream>

#include "fixtures.hpp"

using namespace dforge;
using namespace dforge::testing;

namespace {

SkewPoly random_skew(const ExtField& K, Rng& rng, int max_degree) {
  std::uniform_int_distribution<int> d(0, max_degree);
  return SkewPoly::random(K, rng, d(rng), 1, 1);
}

}  // namespace

TEST(SkewPoly, DefiningRelation) {
  RationalSetup Q(3);
  const auto& K = *Q.K;
  auto tau = SkewPoly::tau(K);
  auto T = SkewPoly::constant(K.T());
  EXPECT_EQ(tau * T, SkewPoly::monomial(K.T().pow(3), 1));
  auto one = SkewPoly::constant(K.one());
  EXPECT_EQ((tau + one) * (tau - one), SkewPoly::monomial(K.one(), 2) - one);
}

TEST(SkewPoly, QuadraticExampleProduct) {
  for (std::uint32_t p : {3u, 5u}) {
    QuadraticSetup S(p);
    const auto& K = *S.K;
    auto a = S.alpha();
    auto mu = skew(K, {a + K.one(), -K.one()});
    auto eta = skew(K, {a - K.one(), K.one()});
    auto expected = skew(K, {K.T(), K.from_fq(K.fq().from_int(2)) + a - a.frobenius(), -K.one()});
    EXPECT_EQ(mu * eta, expected) << "p=" << p;
    EXPECT_EQ(conjugate(S.galois, S.s(), mu), skew(K, {-a + K.one(), -K.one()}));
    EXPECT_EQ(conjugate(S.galois, S.galois.identity(), mu), mu);
  }
}

TEST(SkewPoly, DivisionExamples) {
  RationalSetup Q(3);
  const auto& K = *Q.K;
  auto tau = SkewPoly::tau(K);
  auto [q1, r1] = right_divmod(tau * tau, tau);
  EXPECT_EQ(q1, tau);
  EXPECT_TRUE(r1.is_zero());
  auto c = SkewPoly::constant(K.T() + K.one());
  auto [q2, r2] = right_divmod(tau + c, tau);
  EXPECT_EQ(q2, SkewPoly::constant(K.one()));
  EXPECT_EQ(r2, c);
  EXPECT_THROW(right_divmod(tau, SkewPoly(K)), Error);
}

TEST(SkewPoly, GcdExamples) {
  RationalSetup Q(5);
  const auto& K = *Q.K;
  auto tau = SkewPoly::tau(K);
  auto one = SkewPoly::constant(K.one());
  EXPECT_EQ(right_gcd(tau - one, tau + one), one);
  auto a = skew(K, {K.T(), K.T() + K.one()});
  EXPECT_EQ(right_gcd(a, SkewPoly(K)), a.monic());
  EXPECT_TRUE(right_gcd(a, SkewPoly(K)).is_monic());
  try {
    right_gcd(SkewPoly(K), SkewPoly(K));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BothZero);
  }
}

TEST(SkewPoly, EvalAndDifferentialExamples) {
  RationalSetup Q(3);
  const auto& K = *Q.K;
  auto lambda = K.T() + K.one();
  EXPECT_EQ(SkewPoly::tau(K).eval(lambda), lambda.pow(3));
  EXPECT_EQ(SkewPoly::constant(K.T()).eval(lambda), K.T() * lambda);
  auto phi = skew(K, {K.T(), K.T() * K.T(), K.one()});
  EXPECT_EQ(phi.differential(), K.T());
  EXPECT_TRUE(SkewPoly(K).differential().is_zero());
}

TEST(SkewPoly, MixedFieldsRejected) {
  RationalSetup A(3), B(3);
  auto x = SkewPoly::tau(*A.K), y = SkewPoly::tau(*B.K);
  try {
    (void)(x * y);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
  }
}

TEST(SkewPoly, RingAxiomsOnRandomTriples) {
  Rng rng(21);
  QuadraticSetup S(3);
  const auto& K = *S.K;
  for (int i = 0; i < 1000; ++i) {
    auto a = random_skew(K, rng, 2), b = random_skew(K, rng, 2), c = random_skew(K, rng, 2);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a + b) * c, a * c + b * c);
    ASSERT_EQ((a * b).degree(), a.degree() + b.degree());
  }
}

TEST(SkewPoly, DivisionRoundTrip) {
  Rng rng(22);
  RationalSetup Q(5);
  QuadraticSetup S(3);
  for (const ExtField* K : {Q.K.get(), S.K.get()}) {
    for (int i = 0; i < 500; ++i) {
      auto a = random_skew(*K, rng, 5), b = random_skew(*K, rng, 3);
      auto [q, r] = right_divmod(a, b);
      ASSERT_EQ(q * b + r, a);
      ASSERT_LT(r.degree(), b.degree());
    }
  }
}

TEST(SkewPoly, GcdFindsPlantedRightFactor) {
  Rng rng(23);
  QuadraticSetup S(3);
  const auto& K = *S.K;
  for (int i = 0; i < 500; ++i) {
    auto c = SkewPoly::random(K, rng, 1 + static_cast<int>(rng() % 2), 1, 1);
    auto b = random_skew(K, rng, 2), d = random_skew(K, rng, 2);
    auto g = right_gcd(b * c, d * c);
    ASSERT_TRUE(g.is_monic());
    ASSERT_TRUE(right_divides(c, g));
    ASSERT_TRUE(right_divides(g, b * c));
    ASSERT_TRUE(right_divides(g, d * c));
  }
}

TEST(SkewPoly, EvalDifferentialConjugateProperties) {
  Rng rng(24);
  QuadraticSetup S(3);
  const auto& K = *S.K;
  for (int i = 0; i < 300; ++i) {
    auto a = random_skew(K, rng, 2), b = random_skew(K, rng, 2);
    auto l = K.random(rng, 2, 1), m = K.random(rng, 2, 1);
    ASSERT_EQ((a * b).eval(l), a.eval(b.eval(l)));
    ASSERT_EQ(a.eval(l + m), a.eval(l) + a.eval(m));
    ASSERT_EQ((a * b).differential(), a.differential() * b.differential());
    ASSERT_EQ((a + b).differential(), a.differential() + b.differential());
    auto s = S.s();
    ASSERT_EQ(conjugate(S.galois, s, a * b), conjugate(S.galois, s, a) * conjugate(S.galois, s, b));
    ASSERT_EQ(conjugate(S.galois, s, a).degree(), a.degree());
  }
}

TEST(SkewPoly, ExactQuotient) {
  Rng rng(25);
  RationalSetup Q(3);
  const auto& K = *Q.K;
  auto a = SkewPoly::random(K, rng, 2, 2, 1), b = SkewPoly::random(K, rng, 2, 2, 1);
  EXPECT_EQ(exact_right_quotient(a * b, b), a);
  try {
    exact_right_quotient(a * b + SkewPoly::constant(K.one()), b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionInexact);
  }
}

TEST(SkewPoly, TextForm) {
  QuadraticSetup S(3);
  const auto& K = *S.K;
  auto mu = skew(K, {S.alpha() + K.one(), -K.one()});
  std::ostringstream os;
  os << mu;
  EXPECT_FALSE(os.str().empty());
  EXPECT_NE(os.str().find('t'), std::string::npos);
}
