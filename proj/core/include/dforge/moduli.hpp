#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dforge/isogeny.hpp"

namespace dforge {

/// The Atkin-Lehner involution w_m of level n: m | n with (m, n/m) = 1.
class ALElement {
 public:
  /// Throws InvalidArgument unless m is a Hall divisor of n.
  ALElement(IdealA m, IdealA n);
  static ALElement identity(const IdealA& n) { return ALElement(IdealA::unit(n.field()), n); }

  const IdealA& m() const noexcept { return m_; }
  const IdealA& n() const noexcept { return n_; }
  bool is_identity() const noexcept { return m_.is_unit(); }

  friend bool operator==(const ALElement& a, const ALElement& b) noexcept { return a.m_ == b.m_ && a.n_ == b.n_; }
  friend bool operator<(const ALElement& a, const ALElement& b) noexcept {
    return a.n_ == b.n_ ? a.m_ < b.m_ : a.n_ < b.n_;
  }

 private:
  IdealA m_, n_;
};

/// w_{m1}w_{m2} = w_{m1 m2/(m1,m2)^2}; throws AmbientMismatch.
ALElement al_compose(const ALElement& a, const ALElement& b);
/// All 2^k elements of W(n), identity first.
std::vector<ALElement> al_group(const IdealA& n);

/// A point of Y_0(n): a cyclic isogeny μ: φ → ψ of degree n.
class ModuliPoint {
 public:
  /// Throws NotCyclic when the kernel is not cyclic.
  explicit ModuliPoint(Isogeny iso);

  const Isogeny& iso() const noexcept { return iso_; }
  const IdealA& n() const noexcept { return n_; }

 private:
  Isogeny iso_;
  IdealA n_;
};

/// w_m·x. With μ_m = rgcd(μ, φ_{a_m}) and μ = μ_{n'}·μ_m, the result is the
/// isogeny out of φ_m = φ/μ_m whose kernel is Ker μ̂_m ⊕ Ker μ_{n'}; for
/// m = n it is dual(μ). Needs a certificate for x, which carries over.
/// Throws DegreeMismatch, MissingCertificate.
ModuliPoint al_apply(const ALElement& w, const ModuliPoint& x);

struct ThetaPair {
  ExtElem j_source, j_target;
  friend bool operator==(const ThetaPair&, const ThetaPair&) = default;
};

/// (j(φ), j(ψ)): the images of x and of w_n x in Y_0(1).
ThetaPair theta(const ModuliPoint& x);

/// Witness (u, v) with y.source = u·φ·u^{-1}, y.target = v·ψ·v^{-1} and
/// y.mu = c·v·μ·u^{-1} for some c in F_q^×, found through degree-0 isogeny
/// searches; nullopt when Θ differs or no witness exists.
std::optional<std::pair<ExtElem, ExtElem>> scalar_equivalence(const ModuliPoint& x, const ModuliPoint& y,
                                                              const SearchOptions& options = {});

struct StarOrbit {
  ModuliPoint base;
  std::vector<std::pair<ALElement, ModuliPoint>> translates;  // every w in W(n)
  /// {w : Θ(wx) = Θ(x)}; nontrivial only for CM points.
  std::vector<ALElement> stabilizer;
  bool cm = false;
  std::size_t size = 1;  // number of distinct points
  std::optional<GaloisDatum> galois;
  std::map<GroupElem, ALElement> m_map;  // ˢx = w_{m_s} x, least representative
};

/// Throws EvenCharacteristicUnsupported for q even, NotGStable when some ˢx
/// is not a translate.
StarOrbit star_orbit(const ModuliPoint& x, const GaloisDatum* galois = nullptr);

struct DescentData {
  std::map<GroupElem, ALElement> hom;  // into W(n)/D_x, by least representative
  std::uint64_t image_order = 1;
  std::uint64_t bound = 1;             // degree bound 2^{rank of the image}
};

/// Checks that s ↦ w_{m_s} D_x is a homomorphism on the whole group;
/// throws NotAHomomorphism.
DescentData descent_data(const GaloisDatum& galois, const std::map<GroupElem, ALElement>& m_map,
                         const std::vector<ALElement>& stabilizer);
/// Throws InvalidArgument without Galois data; EvenCharacteristicUnsupported.
DescentData descent_data(const StarOrbit& orbit);

/// True iff every provided isogeny ˢφ → φ has degree dividing n.
bool is_central(const DrinfeldModule& phi, const std::vector<Isogeny>& conjugate_isogenies, const IdealA& n);

std::string to_string(const ALElement& w);

}  // namespace dforge
