#include "dforge/drinfeld.hpp"

#include <ostream>
#include <set>

#include "dforge/errors.hpp"
#include "dforge/rational_roots.hpp"

namespace dforge {

DrinfeldModule::DrinfeldModule(SkewPoly phiT) : phiT_(std::move(phiT)) {
  const ExtField& K = phiT_.field();
  if (!(phiT_.differential() == K.T())) fail(ErrorCode::BadConstantTerm, "constant term of φ_T must be T");
  if (phiT_.degree() < 1) fail(ErrorCode::RankZero, "φ_T must have positive τ-degree");
}

DrinfeldModule make_module(SkewPoly phiT) { return DrinfeldModule(std::move(phiT)); }

ExtElem DrinfeldModule::g() const {
  if (rank() != 2) fail(ErrorCode::NotRankTwo, "operation needs a rank-2 module");
  return phiT_.coeff(1);
}

ExtElem DrinfeldModule::delta() const {
  if (rank() != 2) fail(ErrorCode::NotRankTwo, "operation needs a rank-2 module");
  return phiT_.coeff(2);
}

SkewPoly DrinfeldModule::phi(const PolyA& a) const {
  const ExtField& K = field();
  if (&a.field() != &K.fq()) fail(ErrorCode::FieldMismatch, "a lives over a different F_q");
  SkewPoly r(K);
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    r = r * phiT_;
    if (a.coeffs()[i] != 0) r += SkewPoly::constant(K.from_fq(a.coeffs()[i]));
  }
  return r;
}

ExtElem DrinfeldModule::j_invariant() const {
  const ExtElem gg = g(), d = delta();
  return gg.pow_u(std::uint64_t(field().fq().order()) + 1) * d.inverse();
}

DrinfeldModule conjugate_module(const GaloisDatum& galois, const GroupElem& s, const DrinfeldModule& phi) {
  return DrinfeldModule(conjugate(galois, s, phi.phiT()));
}

DrinfeldModule scalar_conjugate(const DrinfeldModule& phi, const ExtElem& u) {
  if (u.is_zero()) fail(ErrorCode::DivisionByZero, "conjugation by zero");
  return DrinfeldModule(phi.phiT().left_scaled(u).right_scaled(u.inverse()));
}

namespace {

void check_pair(const DrinfeldModule& phi, const DrinfeldModule& psi) {
  if (&phi.field() != &psi.field()) fail(ErrorCode::FieldMismatch, "modules over different fields");
  if (phi.rank() != 2 || psi.rank() != 2) fail(ErrorCode::NotRankTwo, "intertwiner search needs rank 2");
}

// Coefficients c_0..c_N of u for a given c_0, or nullopt when the closure
// conditions c_{N+1} = c_{N+2} = 0 fail.
std::optional<std::vector<ExtElem>> recurrence_values(const DrinfeldModule& phi, const DrinfeldModule& psi, int N,
                                                      const ExtElem& c0) {
  const ExtField& K = phi.field();
  const ExtElem g = phi.g(), d = phi.delta(), h = psi.g(), e = psi.delta();
  const ExtElem T = K.T();
  std::vector<ExtElem> c{c0};
  ExtElem Tq = T, gq = g, dq = d;  // T^{q^k}, g^{q^{k-1}}, Δ^{q^{k-2}}
  for (int k = 1; k <= N + 2; ++k) {
    Tq = Tq.frobenius();
    if (k >= 2) gq = gq.frobenius();
    if (k >= 3) dq = dq.frobenius();
    const std::size_t i = static_cast<std::size_t>(k);
    ExtElem num = h * c[i - 1].frobenius() - gq * c[i - 1];
    if (k >= 2) num += e * c[i - 2].frobenius(2) - dq * c[i - 2];
    if (k <= N) {
      c.push_back(num * (Tq - T).inverse());
    } else {
      if (!num.is_zero()) return std::nullopt;
      c.push_back(K.zero());
    }
  }
  c.resize(static_cast<std::size_t>(N) + 1, K.zero());
  return c;
}

// Greedy F_q-basis of a finite F_q-subspace given by all its elements.
template <class E>
std::vector<E> fq_basis(const std::vector<E>& elements, const FqField& F) {
  std::vector<E> basis;
  std::set<E> span;
  if (elements.empty()) return basis;
  span.insert(elements.front().zero_like());
  for (const auto& v : elements) {
    if (span.count(v)) continue;
    basis.push_back(v);
    std::set<E> next;
    for (const auto& s : span)
      for (FqField::Value c = 0; c < F.order(); ++c) next.insert(s + v.scaled(c));
    span = std::move(next);
  }
  return basis;
}

// Linearized closure polynomial R: the admissible c_0 are exactly its K-roots.
SkewPoly closure_polynomial(const DrinfeldModule& phi, const DrinfeldModule& psi, int N) {
  const ExtField& K = phi.field();
  const ExtElem g = phi.g(), d = phi.delta(), h = psi.g(), e = psi.delta();
  const SkewPoly htau = SkewPoly::monomial(h, 1), etau2 = SkewPoly::monomial(e, 2);
  const ExtElem T = K.T();
  std::vector<SkewPoly> L{SkewPoly::constant(K.one())};  // L_0
  SkewPoly Lprev(K);                                     // L_{-1}
  ExtElem Tq = T, gq = g, dq = d;
  for (int k = 1; k <= N; ++k) {
    Tq = Tq.frobenius();
    if (k >= 2) gq = gq.frobenius();
    if (k >= 3) dq = dq.frobenius();
    SkewPoly next = (htau - SkewPoly::constant(gq)) * L.back();
    if (k >= 2) next += (etau2 - SkewPoly::constant(dq)) * Lprev;
    Lprev = L.back();
    L.push_back(next.left_scaled((Tq - T).inverse()));
  }
  // g^{q^N}, Δ^{q^{N-1}}, Δ^{q^N}
  const ExtElem gN = g.frobenius(static_cast<std::size_t>(N));
  const ExtElem dN = d.frobenius(static_cast<std::size_t>(N));
  SkewPoly P1 = (htau - SkewPoly::constant(gN)) * L.back();
  if (N >= 1) P1 += (etau2 - SkewPoly::constant(d.frobenius(static_cast<std::size_t>(N - 1)))) * Lprev;
  const SkewPoly P2 = (etau2 - SkewPoly::constant(dN)) * L.back();
  return right_gcd(P1, P2);
}

std::vector<ExtElem> rational_kernel(const SkewPoly& R) {
  std::vector<RatFunc> coeffs;
  for (const auto& c : R.coeffs()) coeffs.push_back(c.coord(0));
  std::vector<ExtElem> roots;
  for (const auto& r : linearized_roots(coeffs)) roots.push_back(R.field().from_rat(r));
  return roots;
}

}  // namespace

std::optional<SkewPoly> intertwiner_from_constant(const DrinfeldModule& phi, const DrinfeldModule& psi, int N,
                                                  const ExtElem& c0) {
  check_pair(phi, psi);
  if (N < 0) fail(ErrorCode::InvalidArgument, "degree bound must be non-negative");
  if (&c0.field() != &phi.field()) fail(ErrorCode::FieldMismatch, "candidate from another field");
  auto c = recurrence_values(phi, psi, N, c0);
  if (!c) return std::nullopt;
  return SkewPoly(phi.field(), std::move(*c));
}

IntertwinerSearch find_intertwiners(const DrinfeldModule& phi, const DrinfeldModule& psi, int N,
                                    const SearchOptions& options) {
  check_pair(phi, psi);
  if (N < 0) fail(ErrorCode::InvalidArgument, "degree bound must be non-negative");
  const ExtField& K = phi.field();
  IntertwinerSearch out;
  out.bound = N;
  std::vector<ExtElem> constants;
  if (K.is_rational()) {
    constants = rational_kernel(closure_polynomial(phi, psi, N));
  } else {
    if (!options.candidates)
      fail(ErrorCode::UnsupportedField, "automatic intertwiner search needs K = Q; pass candidate constant terms");
    out.completeness = SearchCompleteness::CandidateRestricted;
    std::vector<ExtElem> cands = *options.candidates;
    if (phi == psi) {
      // the A-part φ_a, deg a <= N/2, is always present
      ExtElem Tk = K.one();
      for (int k = 0; 2 * k <= N; ++k, Tk *= K.T()) cands.push_back(Tk);
    }
    constants.push_back(K.zero());
    for (const auto& c0 : cands) {
      if (options.stop.stop_requested()) fail(ErrorCode::Cancelled, "intertwiner search cancelled");
      if (intertwiner_from_constant(phi, psi, N, c0)) constants.push_back(c0);
    }
  }
  for (const auto& c0 : fq_basis(constants, K.fq())) {
    if (options.stop.stop_requested()) fail(ErrorCode::Cancelled, "intertwiner search cancelled");
    auto u = intertwiner_from_constant(phi, psi, N, c0);
    if (!u) fail(ErrorCode::InternalInconsistency, "closure root does not close the recurrence");
    if (!(*u * phi.phiT() == psi.phiT() * *u))
      fail(ErrorCode::InternalInconsistency, "recurrence produced a non-intertwiner");
    out.basis.push_back(std::move(*u));
  }
  return out;
}

IntertwinerSearch endo_search(const DrinfeldModule& phi, int N, const SearchOptions& options) {
  return find_intertwiners(phi, phi, N, options);
}

std::optional<NonCmCertificate> certify_non_cm(const DrinfeldModule& phi, int N, const SearchOptions& options) {
  const auto s = endo_search(phi, N, options);
  if (s.basis.size() != static_cast<std::size_t>(N / 2 + 1)) return std::nullopt;
  return NonCmCertificate{N, s.completeness};
}

DescentCocycle coboundary(const GaloisDatum& galois, const ExtElem& c) {
  DescentCocycle out;
  for (const auto& s : galois.elements()) out.nu.emplace(s, c * galois.apply(s, c).inverse());
  return out;
}

DescentResult descend_k_model(const DrinfeldModule& phi, const GaloisDatum& galois, const DescentCocycle& cocycle,
                              Rng& rng) {
  if (&galois.field() != &phi.field()) fail(ErrorCode::FieldMismatch, "Galois datum acts on another field");
  if (!galois.is_cyclic()) fail(ErrorCode::NonCyclicGroup, "descent is implemented for cyclic groups only");
  const ExtField& K = phi.field();
  const auto elems = galois.elements();
  auto nu = [&](const GroupElem& s) -> const ExtElem& {
    auto it = cocycle.nu.find(s);
    if (it == cocycle.nu.end()) fail(ErrorCode::CocycleViolation, "cocycle misses " + galois.element_name(s));
    if (it->second.is_zero()) fail(ErrorCode::CocycleViolation, "cocycle value is zero");
    return it->second;
  };
  for (const auto& s : elems) {
    for (const auto& t : elems)
      if (!(galois.apply(s, nu(t)) * nu(s) == nu(galois.compose(s, t))))
        fail(ErrorCode::CocycleViolation, "cocycle relation fails at (" + galois.element_name(s) + ", " +
                                              galois.element_name(t) + ")");
    const DrinfeldModule sphi = conjugate_module(galois, s, phi);
    if (!(scalar_conjugate(sphi, nu(s)) == phi))
      fail(ErrorCode::CocycleViolation, "ν_" + galois.element_name(s) + " is not an isomorphism ˢφ → φ");
  }

  auto attempt = [&](const ExtElem& theta) -> std::optional<ExtElem> {
    ExtElem b = K.zero();
    for (const auto& t : elems) b += nu(t) * galois.apply(t, theta);
    if (b.is_zero()) return std::nullopt;
    return b.inverse();
  };
  std::optional<ExtElem> v;
  ExtElem theta = K.one();
  for (std::size_t i = 0; i < K.degree() && !v; ++i, theta *= K.gen()) v = attempt(theta);
  for (int tries = 0; tries < 64 && !v; ++tries) v = attempt(K.random(rng, 2, 1));
  if (!v) fail(ErrorCode::InternalInconsistency, "no θ gave a nonzero Hilbert 90 sum");

  DrinfeldModule model = scalar_conjugate(phi, *v);
  for (std::size_t i = 0; i < galois.num_generators(); ++i)
    for (const auto& c : model.phiT().coeffs())
      if (!(galois.apply_generator(i, c) == c))
        fail(ErrorCode::InternalInconsistency, "descended model is not Galois-fixed");
  for (const auto& s : elems)
    if (!(nu(s) == v->inverse() * galois.apply(s, *v)))
      fail(ErrorCode::InternalInconsistency, "ν does not split the cocycle");
  return {std::move(model), *v};
}

std::ostream& operator<<(std::ostream& os, const DrinfeldModule& phi) { return os << phi.phiT(); }

}  // namespace dforge
