#include "fixtures.hpp"

namespace dforge::testing {

RationalSetup::RationalSetup(std::uint32_t p, unsigned d)
    : fq(FqField::with_degree(p, d)), K(ExtField::rational(fq)) {}

namespace {
ExtFieldPtr quadratic_field(const FqFieldPtr& fq) {
  const FqField& F = *fq;
  // x^2 - (T + 1)
  return ExtField::create(fq, {-rat(F, {1, 1}), RatFunc(F), RatFunc::constant(F, 1)});
}
}  // namespace

QuadraticSetup::QuadraticSetup(std::uint32_t p, unsigned d)
    : fq(FqField::with_degree(p, d)),
      K(quadratic_field(fq)),
      galois(K, {GaloisGenerator{"s", -K->gen(), 2}}) {}

namespace {
SkewPoly example_mu(const ExtField& K) { return skew(K, {K.gen() + K.one(), -K.one()}); }
SkewPoly example_eta(const ExtField& K) { return skew(K, {K.gen() - K.one(), K.one()}); }
}  // namespace

Example35::Example35(std::uint32_t p, unsigned d)
    : S(p, d),
      mu(example_mu(*S.K)),
      eta(example_eta(*S.K)),
      phi(mu * eta),
      sphi(conjugate_module(S.galois, S.s(), phi)) {}

ExtElem Example35::expected_j() const {
  const auto& K = *S.K;
  const ExtElem a = K.gen();
  const ExtElem b = K.from_fq(K.fq().from_int(2)) + a - a.frobenius();
  return -b.pow_u(K.fq().order() + 1);
}

PolyA poly(const FqField& F, std::vector<std::int64_t> coeffs) {
  std::vector<FqField::Value> c;
  for (auto x : coeffs) c.push_back(F.from_int(x));
  return PolyA(F, std::move(c));
}

RatFunc rat(const FqField& F, std::vector<std::int64_t> num, std::vector<std::int64_t> den) {
  return RatFunc(poly(F, std::move(num)), poly(F, std::move(den)));
}

ExtElem ext(const ExtField& K, std::vector<RatFunc> coords) { return K.from_coords(std::move(coords)); }

SkewPoly skew(const ExtField& K, std::vector<ExtElem> coeffs) { return SkewPoly(K, std::move(coeffs)); }

}  // namespace dforge::testing
