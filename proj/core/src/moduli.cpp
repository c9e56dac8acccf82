#include "dforge/moduli.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dforge/errors.hpp"

namespace dforge {

namespace {

IdealA hall_part(const IdealA& n, const IdealA& m) {
  // the largest divisor of n supported on the primes of m
  IdealA out = IdealA::unit(n.field());
  for (const auto& p : m.prime_factors())
    for (unsigned i = n.valuation(p); i > 0; --i) out = out * p;
  return out;
}

void require_odd(const FqField& F) {
  if (F.characteristic() == 2)
    fail(ErrorCode::EvenCharacteristicUnsupported, "decomposition groups are not controlled for q even");
}

ALElement reduce_mod(const ALElement& w, const std::vector<ALElement>& stabilizer) {
  ALElement best = w;
  for (const auto& d : stabilizer) best = std::min(best, al_compose(w, d));
  return best;
}

// Degree-0 intertwiner from a to b, or 1 when the modules coincide.
std::optional<ExtElem> isomorphism(const DrinfeldModule& a, const DrinfeldModule& b, const SearchOptions& options) {
  if (a == b) return a.field().one();
  const auto found = find_intertwiners(a, b, 0, options);
  if (found.basis.empty()) return std::nullopt;
  return found.basis.front().differential();
}

}  // namespace

ALElement::ALElement(IdealA m, IdealA n) : m_(std::move(m)), n_(std::move(n)) {
  if (!divides(m_, n_)) fail(ErrorCode::InvalidArgument, "m does not divide n");
  if (!gcd(m_, quotient(n_, m_)).is_unit()) fail(ErrorCode::InvalidArgument, "m is not coprime to n/m");
}

ALElement al_compose(const ALElement& a, const ALElement& b) {
  if (!(a.n() == b.n())) fail(ErrorCode::AmbientMismatch, "Atkin-Lehner elements of different levels");
  const IdealA g = gcd(a.m(), b.m());
  return ALElement(quotient(a.m() * b.m(), g * g), a.n());
}

std::vector<ALElement> al_group(const IdealA& n) {
  std::vector<IdealA> parts;
  for (const auto& p : n.prime_factors()) parts.push_back(hall_part(n, p));
  std::vector<ALElement> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << parts.size()); ++mask) {
    IdealA m = IdealA::unit(n.field());
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (mask >> i & 1) m = m * parts[i];
    out.emplace_back(m, n);
  }
  return out;
}

ModuliPoint::ModuliPoint(Isogeny iso) : iso_(std::move(iso)), n_(iso_.degree().degree) {
  if (!iso_.degree().n2.is_unit()) fail(ErrorCode::NotCyclic, "moduli points need a cyclic kernel");
}

ModuliPoint al_apply(const ALElement& w, const ModuliPoint& x) {
  if (!(w.n() == x.n())) fail(ErrorCode::DegreeMismatch, "involution level differs from the degree of the point");
  const auto& cert = x.iso().certificate();
  if (!cert) fail(ErrorCode::MissingCertificate, "Atkin-Lehner action needs a non-CM certificate");
  if (w.is_identity()) return x;
  if (w.m() == w.n()) return ModuliPoint(dual(x.iso()).with_certificate(*cert));

  const DrinfeldModule& phi = x.iso().source();
  const SkewPoly mu_m = right_gcd(x.iso().mu(), phi.phi(w.m().gen()));
  const Isogeny to_phi_m = quotient_isogeny(phi, mu_m);
  const DrinfeldModule& phi_m = to_phi_m.target();
  const Isogeny back = dual(to_phi_m);
  const Isogeny forward(phi_m, x.iso().target(), exact_right_quotient(x.iso().mu(), mu_m));
  if (!(back.degree().degree == w.m()) || !(forward.degree().degree == quotient(w.n(), w.m())))
    fail(ErrorCode::InternalInconsistency, "m-part split has the wrong degrees");
  return ModuliPoint(kernel_sum({back, forward}).with_certificate(*cert));
}

ThetaPair theta(const ModuliPoint& x) { return {x.iso().source().j_invariant(), x.iso().target().j_invariant()}; }

std::optional<std::pair<ExtElem, ExtElem>> scalar_equivalence(const ModuliPoint& x, const ModuliPoint& y,
                                                              const SearchOptions& options) {
  if (!(x.n() == y.n()) || !(theta(x) == theta(y))) return std::nullopt;
  const auto u = isomorphism(x.iso().source(), y.iso().source(), options);
  const auto v = isomorphism(x.iso().target(), y.iso().target(), options);
  if (!u || !v) return std::nullopt;
  const SkewPoly moved = x.iso().mu().right_scaled(u->inverse()).left_scaled(*v);
  const ExtElem c = y.iso().mu().lead() / moved.lead();
  if (!c.is_fq() || !(moved.left_scaled(c) == y.iso().mu())) return std::nullopt;
  return std::make_pair(*u, *v);
}

StarOrbit star_orbit(const ModuliPoint& x, const GaloisDatum* galois) {
  require_odd(x.iso().source().field().fq());
  StarOrbit out{x, {}, {}, false, 0, std::nullopt, {}};
  const ThetaPair base = theta(x);
  std::vector<ThetaPair> seen;
  for (const auto& w : al_group(x.n())) {
    ModuliPoint wx = al_apply(w, x);
    const ThetaPair th = theta(wx);
    if (th == base) out.stabilizer.push_back(w);
    if (std::find(seen.begin(), seen.end(), th) == seen.end()) seen.push_back(th);
    out.translates.emplace_back(w, std::move(wx));
  }
  out.size = seen.size();
  out.cm = out.stabilizer.size() > 1;
  if (!galois) return out;
  if (&galois->field() != &x.iso().source().field()) fail(ErrorCode::FieldMismatch, "Galois datum acts on another field");
  out.galois = *galois;
  for (const auto& s : galois->elements()) {
    const ThetaPair conj{galois->apply(s, base.j_source), galois->apply(s, base.j_target)};
    std::optional<ALElement> hit;
    for (const auto& [w, wx] : out.translates)
      if (theta(wx) == conj && (!hit || w < *hit)) hit = w;
    if (!hit) fail(ErrorCode::NotGStable, "conjugate by " + galois->element_name(s) + " is not an Atkin-Lehner translate");
    out.m_map.emplace(s, *hit);
  }
  return out;
}

DescentData descent_data(const GaloisDatum& galois, const std::map<GroupElem, ALElement>& m_map,
                         const std::vector<ALElement>& stabilizer) {
  DescentData out;
  for (const auto& s : galois.elements()) {
    const auto it = m_map.find(s);
    if (it == m_map.end()) fail(ErrorCode::InvalidArgument, "no involution for " + galois.element_name(s));
    out.hom.emplace(s, reduce_mod(it->second, stabilizer));
  }
  for (const auto& [s, ws] : out.hom)
    for (const auto& [t, wt] : out.hom)
      if (!(reduce_mod(al_compose(ws, wt), stabilizer) == out.hom.at(galois.compose(s, t))))
        fail(ErrorCode::NotAHomomorphism, "s ↦ w_{m_s} does not respect " + galois.element_name(s) + "·" +
                                              galois.element_name(t));
  std::set<ALElement> image;
  for (const auto& [s, w] : out.hom) image.insert(w);
  out.image_order = image.size();
  out.bound = out.image_order;  // an elementary abelian 2-group of rank r has order 2^r
  return out;
}

DescentData descent_data(const StarOrbit& orbit) {
  if (!orbit.galois) fail(ErrorCode::InvalidArgument, "descent data needs Galois data");
  require_odd(orbit.galois->field().fq());
  return descent_data(*orbit.galois, orbit.m_map, orbit.stabilizer);
}

bool is_central(const DrinfeldModule& phi, const std::vector<Isogeny>& conjugate_isogenies, const IdealA& n) {
  for (const auto& iso : conjugate_isogenies) {
    if (!(iso.target() == phi)) fail(ErrorCode::ChainMismatch, "isogeny does not end at φ");
    if (!divides(iso.degree().degree, n)) return false;
  }
  return true;
}

std::string to_string(const ALElement& w) {
  std::ostringstream os;
  os << "w" << w.m();
  return os.str();
}

}  // namespace dforge
