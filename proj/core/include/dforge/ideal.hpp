#pragma once

#include <iosfwd>
#include <memory>
#include <vector>

#include "dforge/factor.hpp"
#include "dforge/poly_a.hpp"

namespace dforge {

/// A nonzero ideal of A = F_q[T], stored by its monic generator.
///
/// The factorization is computed on first request (with a fixed seed, so the
/// result is reproducible) and shared between copies.
class IdealA {
 public:
  /// Throws ZeroIdeal for the zero polynomial.
  explicit IdealA(const PolyA& generator);
  static IdealA unit(const FqField& field) { return IdealA(PolyA::constant(field, 1)); }

  const PolyA& gen() const noexcept { return gen_; }
  const FqField& field() const noexcept { return gen_.field(); }
  /// deg of the generator; #(A/n) = q^norm_degree.
  int norm_degree() const noexcept { return gen_.degree(); }
  bool is_unit() const noexcept { return gen_.is_one(); }
  bool is_prime() const;
  bool is_squarefree() const;

  const std::vector<PrimePower>& factors() const;
  std::vector<IdealA> prime_factors() const;
  /// Exponent of the prime p in this ideal.
  unsigned valuation(const IdealA& p) const;

  friend IdealA operator*(const IdealA& a, const IdealA& b) { return IdealA(a.gen_ * b.gen_); }
  friend bool operator==(const IdealA& a, const IdealA& b) noexcept { return a.gen_ == b.gen_; }
  friend bool operator<(const IdealA& a, const IdealA& b) noexcept { return a.gen_ < b.gen_; }

 private:
  struct FactorCache;

  PolyA gen_;
  std::shared_ptr<FactorCache> cache_;
};

/// Prime ideals are IdealA values whose generator is irreducible.
using PrimeIdealA = IdealA;

/// factor_ideal with an explicit randomness source.
std::vector<PrimePower> factor_ideal(const IdealA& n, Rng& rng);

IdealA gcd(const IdealA& a, const IdealA& b);
IdealA lcm(const IdealA& a, const IdealA& b);
/// a | b as ideals, i.e. gen(a) divides gen(b).
bool divides(const IdealA& a, const IdealA& b);
/// b / a for a | b; throws DivisionInexact otherwise.
IdealA quotient(const IdealA& b, const IdealA& a);

std::ostream& operator<<(std::ostream& os, const IdealA& n);

}  // namespace dforge
