#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dforge/drinfeld.hpp"
#include "dforge/ideal.hpp"

namespace dforge {

/// Kernel invariants of a rank-2 isogeny: Ker ≅ A/n1 ⊕ A/n2 with n2 | n1.
struct IsogenyDegree {
  IdealA degree;  // n1·n2
  IdealA n1;
  IdealA n2;
};

/// μ: φ → ψ with μφ_T = ψ_Tμ and ∂μ != 0.
///
/// The degree is computed at construction when both modules have rank 2 and
/// the kernel structure is consistent; otherwise degree() recomputes and
/// reports the failure. A non-CM certificate for the source is optional and
/// only required by the operations that rely on the non-CM hypothesis.
class Isogeny {
 public:
  /// Throws FieldMismatch, NotIntertwining or Inseparable.
  Isogeny(DrinfeldModule source, DrinfeldModule target, SkewPoly mu);

  const DrinfeldModule& source() const noexcept { return source_; }
  const DrinfeldModule& target() const noexcept { return target_; }
  const SkewPoly& mu() const noexcept { return mu_; }
  int tau_degree() const noexcept { return mu_.degree(); }

  const std::optional<NonCmCertificate>& certificate() const noexcept { return certificate_; }
  /// Copy carrying a certificate for the source module.
  Isogeny with_certificate(const NonCmCertificate& certificate) const;

  /// Cached kernel invariants; throws NotRankTwo or StructureError.
  IsogenyDegree degree() const;

 private:
  DrinfeldModule source_, target_;
  SkewPoly mu_;
  std::optional<IsogenyDegree> degree_;
  std::optional<NonCmCertificate> certificate_;
};

Isogeny verify_isogeny(const DrinfeldModule& source, const DrinfeldModule& target, const SkewPoly& mu);

/// The monic a of least degree with μ right-dividing φ_a (so a generates n1),
/// found as the first F_q-linear dependence among the remainders of φ_{T^i}.
IdealA annihilator(const Isogeny& iso);

/// n1 = annihilator, n2 the divisor of n1 of degree deg_τ μ - deg n1 with
/// φ_{n2} right-dividing μ. Throws StructureError when no such n2 exists.
IsogenyDegree compute_degree(const Isogeny& iso);

/// Both require a certificate at bound >= deg_τ μ (MissingCertificate); they
/// always agree.
bool is_cyclic(const Isogeny& iso);
bool is_primitive(const Isogeny& iso);

/// η: ψ → φ with ημ = φ_{a_n} and μη = ψ_{a_n}, a_n the monic generator of
/// deg μ. Throws DivisionInexact when the degree is inconsistent.
Isogeny dual(const Isogeny& iso);

/// g∘f; throws ChainMismatch unless target(f) = source(g). Degree
/// multiplicativity is checked when both degrees are available.
Isogeny compose(const Isogeny& g, const Isogeny& f);

/// v_p(deg μ) for a primitive μ; throws NotPrimitive otherwise.
unsigned delta_p(const Isogeny& iso, const PrimeIdealA& p);

struct PrimaryProjection {
  DrinfeldModule target;  // π_p(ψ)
  Isogeny p_part;         // φ → π_p(ψ), degree p^{δ_p}
  Isogeny coprime_part;   // π_p(ψ) → ψ, degree prime to p
};

/// μ = coprime_part·p_part with p_part = rgcd(μ, φ_{a_p^δ}). Throws NotCyclic.
PrimaryProjection project_p(const Isogeny& iso, const PrimeIdealA& p);

/// For cyclic μ of degree p^n: [μ_1, ..., μ_n] of degree p each with
/// μ = μ_n ⋯ μ_1. Throws NotPrimePower or NotCyclic.
std::vector<Isogeny> factor_prime_power(const Isogeny& iso);

struct IsogenySearch {
  std::vector<Isogeny> basis;  // F_q-basis of the intertwiners of τ-degree <= bound
  int bound = 0;
  SearchCompleteness completeness = SearchCompleteness::Complete;
};

/// m: φ → φ/m with (φ/m)_T = m·φ_T·m^{-1}; DivisionInexact when m·φ_T is not
/// right-divisible by m.
Isogeny quotient_isogeny(const DrinfeldModule& phi, const SkewPoly& m);

/// The isogeny from the common source whose kernel is the direct sum of the
/// kernels of `parts`, built as rgcd_i(μ_i·φ_{c_i}) with c_i the product of the
/// other degrees. Degrees must be pairwise coprime (InvalidArgument); sources
/// must agree (ChainMismatch). An empty list is invalid.
Isogeny kernel_sum(const std::vector<Isogeny>& parts);

/// Intertwiner search of find_intertwiners, wrapped as isogenies.
IsogenySearch find_isogenies(const DrinfeldModule& phi, const DrinfeldModule& psi, int N,
                             const SearchOptions& options = {});

struct NormalizedIsogeny {
  unsigned n = 1;             // order of the character s ↦ ξ_s
  ExtElem lambda;             // c0^n, Galois-fixed
  SkewPoly mu_normalized;     // c0^{-1}μ: constant term 1, Galois-fixed
  std::map<GroupElem, FqField::Value> character;  // ξ_s with ˢμ = ξ_s μ
};

/// For a certified primitive isogeny between Galois-fixed modules. Throws
/// NotScalarConjugate when some ˢμ is not an F_q^×-multiple of μ.
NormalizedIsogeny normalize_isogeny(const Isogeny& iso, const GaloisDatum& galois);

}  // namespace dforge
