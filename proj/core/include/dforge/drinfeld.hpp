#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stop_token>
#include <vector>

#include "dforge/galois.hpp"
#include "dforge/skew_poly.hpp"

namespace dforge {

/// A Drinfeld A-module over K given by φ_T = T + g_1 τ + ... + g_r τ^r.
class DrinfeldModule {
 public:
  /// Throws BadConstantTerm when ∂φ_T != T and RankZero when deg_τ φ_T < 1.
  explicit DrinfeldModule(SkewPoly phiT);

  const SkewPoly& phiT() const noexcept { return phiT_; }
  const ExtField& field() const noexcept { return phiT_.field(); }
  int rank() const noexcept { return phiT_.degree(); }
  /// The τ and τ² coefficients of a rank-2 module; throws NotRankTwo otherwise.
  ExtElem g() const;
  ExtElem delta() const;

  /// φ_a by Horner in φ_T. `a` must live over the F_q of K.
  SkewPoly phi(const PolyA& a) const;
  /// g^{q+1}/Δ; throws NotRankTwo.
  ExtElem j_invariant() const;

  friend bool operator==(const DrinfeldModule& a, const DrinfeldModule& b) noexcept { return a.phiT_ == b.phiT_; }

 private:
  SkewPoly phiT_;
};

DrinfeldModule make_module(SkewPoly phiT);

/// (ˢφ)_T = ˢ(φ_T)
DrinfeldModule conjugate_module(const GaloisDatum& galois, const GroupElem& s, const DrinfeldModule& phi);

/// u·c·u^{-1} for a nonzero scalar u: the module isomorphic to φ via u.
DrinfeldModule scalar_conjugate(const DrinfeldModule& phi, const ExtElem& u);

enum class SearchCompleteness { Complete, CandidateRestricted };

struct IntertwinerSearch {
  /// F_q-basis of the intertwiners u with u·φ_T = ψ_T·u and deg_τ u <= bound
  /// (within the candidate span when candidate-restricted).
  std::vector<SkewPoly> basis;
  int bound = 0;
  SearchCompleteness completeness = SearchCompleteness::Complete;
};

struct SearchOptions {
  /// Constant terms to try when K is a proper extension of Q. Ignored over Q.
  std::optional<std::vector<ExtElem>> candidates;
  std::stop_token stop;
};

/// All u: φ → ψ with deg_τ u <= N (rank 2). The constant term c_0 determines u
/// through the coefficient recurrence; admissible c_0 are the K-roots of a
/// linearized closure polynomial, found by rational_roots over Q. Over a
/// proper extension candidates are required (UnsupportedField otherwise).
IntertwinerSearch find_intertwiners(const DrinfeldModule& phi, const DrinfeldModule& psi, int N,
                                    const SearchOptions& options = {});
IntertwinerSearch endo_search(const DrinfeldModule& phi, int N, const SearchOptions& options = {});

/// The τ-degree ≤ N skew polynomial with constant term c0 forced by the
/// recurrence, or nullopt when c0 violates the closure conditions.
std::optional<SkewPoly> intertwiner_from_constant(const DrinfeldModule& phi, const DrinfeldModule& psi, int N,
                                                  const ExtElem& c0);

/// Evidence that φ has no endomorphisms beyond φ_A up to τ-degree `bound`.
struct NonCmCertificate {
  int bound = 0;
  SearchCompleteness method = SearchCompleteness::Complete;
};

/// Certificate when the bounded endomorphism search finds exactly
/// {φ_a : deg a <= N/2}; nullopt when extra endomorphisms appear.
std::optional<NonCmCertificate> certify_non_cm(const DrinfeldModule& phi, int N, const SearchOptions& options = {});

/// ν_s for every element s of the group.
struct DescentCocycle {
  std::map<GroupElem, ExtElem> nu;
};

/// Cocycle s ↦ c / ˢc attached to a scalar c.
DescentCocycle coboundary(const GaloisDatum& galois, const ExtElem& c);

struct DescentResult {
  DrinfeldModule model;  // ψ_T = ν φ_T ν^{-1}, Galois-fixed coefficients
  ExtElem nu;            // satisfies ν_s = ν^{-1}·ˢν
};

/// Weil descent for a cyclic group: checks the cocycle relation ˢν_t ν_s = ν_{st}
/// and the isomorphisms ν_s ˢφ_T ν_s^{-1} = φ_T (CocycleViolation), then
/// builds ν = (Σ_t ν_t ·ᵗθ)^{-1} for θ = 1, x, x², ... or random θ until
/// the sum is nonzero.
DescentResult descend_k_model(const DrinfeldModule& phi, const GaloisDatum& galois, const DescentCocycle& cocycle,
                              Rng& rng);

std::ostream& operator<<(std::ostream& os, const DrinfeldModule& phi);

}  // namespace dforge
