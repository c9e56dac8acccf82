#pragma once

#include <vector>

#include "dforge/poly_a.hpp"

namespace dforge {

struct PrimePower {
  PolyA prime;  // monic irreducible
  unsigned multiplicity;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Factorization of a nonzero polynomial into monic irreducibles; the leading
/// coefficient is dropped. Factors come back sorted by (degree, coefficients),
/// and equal-degree splitting draws only from `rng`.
std::vector<PrimePower> factor(const PolyA& a, Rng& rng);

/// Square-free decomposition of a monic polynomial: a = prod f_i^i.
std::vector<PrimePower> squarefree_factorization(const PolyA& a);

/// For monic square-free f: pairs (g_d, d) with g_d the product of all
/// irreducible factors of degree d.
std::vector<std::pair<PolyA, unsigned>> distinct_degree_factorization(const PolyA& f);

/// Splits a monic square-free f whose irreducible factors all have degree d.
std::vector<PolyA> equal_degree_factorization(const PolyA& f, unsigned d, Rng& rng);

/// True iff gcd(a, T^(q^i) - T) = 1 for all 1 <= i <= deg(a)/2 (and deg a >= 1).
bool is_irreducible(const PolyA& a);

/// All monic irreducibles of the given degree, in lexicographic order, up to `limit` of them.
std::vector<PolyA> monic_irreducibles(const FqField& field, unsigned degree, std::size_t limit = SIZE_MAX);

/// All monic divisors of a monic polynomial with known factorization.
std::vector<PolyA> monic_divisors(const FqField& field, const std::vector<PrimePower>& factorization);

}  // namespace dforge
