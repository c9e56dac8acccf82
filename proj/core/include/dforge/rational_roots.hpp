#pragma once

#include <vector>

#include "dforge/ext_field.hpp"

namespace dforge {

/// All roots of g in Q = F_q(T), sorted and without repetition.
///
/// Clears denominators, picks a prime P of A at which g stays separable and
/// its leading coefficient is a unit, finds the roots modulo P by exhaustion,
/// lifts them P-adically and recovers each candidate by rational
/// reconstruction with degree bounds from the leading and trailing
/// coefficients. Every reported root is verified exactly.
/// Throws ZeroPolynomial when g = 0.
std::vector<RatFunc> rational_roots(const PolyQ& g);

/// Same contract, by plain enumeration of num/den with num | trailing and
/// den | leading coefficient. Exponential in the number of prime factors;
/// kept as an independent cross-check.
std::vector<RatFunc> rational_roots_by_divisors(const PolyQ& g);

/// F_q-basis of the nonzero roots in Q of the linearized polynomial
/// Σ r_i x^{q^i}. Writes a root as n/D with D bounded by the leading
/// coefficient and deg n bounded by valuations at the lowest term and at
/// infinity; the conditions on the coefficients of n are then F_q-linear.
/// Throws ZeroPolynomial when every r_i vanishes.
std::vector<RatFunc> linearized_roots(const std::vector<RatFunc>& r);

/// g multiplied by a common denominator and divided by the content, as
/// polynomials over A with monic leading coefficient. The result is nonzero.
std::vector<PolyA> primitive_part(const PolyQ& g);

}  // namespace dforge
