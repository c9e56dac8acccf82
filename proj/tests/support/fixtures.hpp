#pragma once

#include <dforge/drinfeld.hpp>
#include <dforge/ext_field.hpp>
#include <dforge/galois.hpp>
#include <dforge/rat_func.hpp>
#include <dforge/skew_poly.hpp>

namespace dforge::testing {

/// Q = F_q(T) as a degree-1 extension of itself.
struct RationalSetup {
  FqFieldPtr fq;
  ExtFieldPtr K;
  explicit RationalSetup(std::uint32_t p, unsigned d = 1);
};

/// K = Q(α) with α² = T + 1 (q odd) and s: α ↦ -α.
struct QuadraticSetup {
  FqFieldPtr fq;
  ExtFieldPtr K;
  GaloisDatum galois;
  explicit QuadraticSetup(std::uint32_t p, unsigned d = 1);
  ExtElem alpha() const { return K->gen(); }
  GroupElem s() const { return galois.generator(0); }
};

/// φ_T = μη over Q(α), α² = T + 1, with μ = α + 1 - τ and η = α - 1 + τ.
struct Example35 {
  QuadraticSetup S;
  SkewPoly mu, eta;
  DrinfeldModule phi, sphi;
  explicit Example35(std::uint32_t p, unsigned d = 1);
  /// -(2 + α - α^q)^{q+1}
  ExtElem expected_j() const;
};

RatFunc rat(const FqField& F, std::vector<std::int64_t> num, std::vector<std::int64_t> den = {1});
PolyA poly(const FqField& F, std::vector<std::int64_t> coeffs);
ExtElem ext(const ExtField& K, std::vector<RatFunc> coords);
SkewPoly skew(const ExtField& K, std::vector<ExtElem> coeffs);

}  // namespace dforge::testing
