#include "dforge/isogeny.hpp"

#include <numeric>

#include "dforge/errors.hpp"
#include "dforge/fq_linalg.hpp"

namespace dforge {

namespace {

void require_rank_two(const Isogeny& iso) {
  if (iso.source().rank() != 2 || iso.target().rank() != 2)
    fail(ErrorCode::NotRankTwo, "kernel invariants are implemented for rank 2");
}

void require_certificate(const Isogeny& iso) {
  const auto& c = iso.certificate();
  if (!c) fail(ErrorCode::MissingCertificate, "operation needs a non-CM certificate for the source");
  if (c->bound < iso.tau_degree())
    fail(ErrorCode::MissingCertificate, "certificate bound " + std::to_string(c->bound) + " is below deg_τ μ = " +
                                            std::to_string(iso.tau_degree()));
}

// Each item is a list of K-elements; returns one F_q-column per item so that
// F_q-relations among the items are exactly the nullspace of the columns.
std::vector<FqVector> flatten(const std::vector<std::vector<ExtElem>>& items) {
  std::vector<FqVector> cols(items.size());
  if (items.empty()) return cols;
  const std::size_t slots = items.front().size();
  const ExtField& K = items.front().front().field();
  const FqField& F = K.fq();
  for (std::size_t s = 0; s < slots; ++s) {
    for (std::size_t k = 0; k < K.degree(); ++k) {
      PolyA L = PolyA::constant(F, 1);
      for (const auto& it : items) {
        const RatFunc& x = it[s].coord(k);
        if (!x.is_zero()) L = L / gcd(L, x.den()) * x.den();
      }
      std::vector<PolyA> nums;
      std::size_t width = 0;
      for (const auto& it : items) {
        const RatFunc& x = it[s].coord(k);
        nums.push_back(x.is_zero() ? PolyA(F) : x.num() * (L / x.den()));
        width = std::max(width, nums.back().coeffs().size());
      }
      for (std::size_t i = 0; i < items.size(); ++i) {
        auto c = nums[i].coeffs();
        c.resize(width, 0);
        cols[i].insert(cols[i].end(), c.begin(), c.end());
      }
    }
  }
  return cols;
}

std::vector<ExtElem> padded_coeffs(const SkewPoly& a, std::size_t n) {
  std::vector<ExtElem> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(a.coeff(i));
  return out;
}

DrinfeldModule quotient_module(const DrinfeldModule& phi, const SkewPoly& m) {
  return DrinfeldModule(exact_right_quotient(m * phi.phiT(), m));
}

}  // namespace

Isogeny::Isogeny(DrinfeldModule source, DrinfeldModule target, SkewPoly mu)
    : source_(std::move(source)), target_(std::move(target)), mu_(std::move(mu)) {
  if (&source_.field() != &target_.field() || &mu_.field() != &source_.field())
    fail(ErrorCode::FieldMismatch, "isogeny data over different fields");
  if (mu_.is_zero()) fail(ErrorCode::ZeroPolynomial, "the zero skew polynomial is not an isogeny");
  if (!(mu_ * source_.phiT() == target_.phiT() * mu_)) fail(ErrorCode::NotIntertwining, "μφ_T != ψ_Tμ");
  if (mu_.differential().is_zero()) fail(ErrorCode::Inseparable, "∂μ = 0");
  if (source_.rank() == 2 && target_.rank() == 2) {
    try {
      degree_ = compute_degree(*this);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::StructureError) throw;
    }
  }
}

Isogeny Isogeny::with_certificate(const NonCmCertificate& certificate) const {
  Isogeny out = *this;
  out.certificate_ = certificate;
  return out;
}

IsogenyDegree Isogeny::degree() const {
  if (degree_) return *degree_;
  return compute_degree(*this);
}

Isogeny verify_isogeny(const DrinfeldModule& source, const DrinfeldModule& target, const SkewPoly& mu) {
  return Isogeny(source, target, mu);
}

IdealA annihilator(const Isogeny& iso) {
  const SkewPoly& mu = iso.mu();
  const std::size_t d = static_cast<std::size_t>(mu.degree());
  const DrinfeldModule& phi = iso.source();
  const FqField& F = phi.field().fq();
  // remainders of φ_{T^i}; left multiplication by φ_T preserves the left ideal of μ
  std::vector<std::vector<ExtElem>> rems;
  SkewPoly r = right_divmod(SkewPoly::constant(phi.field().one()), mu).rem;
  for (std::size_t i = 0; i <= d; ++i) {
    if (i > 0) r = right_divmod(phi.phiT() * r, mu).rem;
    rems.push_back(padded_coeffs(r, d));
  }
  if (d == 0) return IdealA::unit(F);
  const auto cols = flatten(rems);
  for (std::size_t m = 0; m <= d; ++m) {
    const auto ns = fq_nullspace(F, std::vector<FqVector>(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(m + 1)));
    if (ns.empty()) continue;
    // columns 0..m-1 are independent, so the relation is unique and involves column m
    return IdealA(PolyA(F, ns.front()));
  }
  fail(ErrorCode::InternalInconsistency, "no annihilator of degree <= deg_τ μ");
}

IsogenyDegree compute_degree(const Isogeny& iso) {
  require_rank_two(iso);
  const IdealA n1 = annihilator(iso);
  const int d = iso.tau_degree();
  const int e2 = d - n1.norm_degree();
  if (e2 < 0 || e2 > n1.norm_degree())
    fail(ErrorCode::StructureError, "annihilator degree incompatible with a rank-2 kernel");
  const FqField& F = n1.field();
  std::vector<IdealA> found;
  for (const auto& b : monic_divisors(F, n1.factors())) {
    if (b.degree() != e2) continue;
    if (right_divides(iso.source().phi(b), iso.mu())) found.emplace_back(b);
  }
  if (found.size() != 1)
    fail(ErrorCode::StructureError, "no unique n2 with φ_{n2} right-dividing μ (" + std::to_string(found.size()) +
                                        " candidates)");
  return {n1 * found.front(), n1, found.front()};
}

bool is_cyclic(const Isogeny& iso) {
  require_certificate(iso);
  return iso.degree().n2.is_unit();
}

bool is_primitive(const Isogeny& iso) {
  // cyclic and primitive coincide for rank-2 non-CM modules
  return is_cyclic(iso);
}

Isogeny dual(const Isogeny& iso) {
  const IsogenyDegree deg = iso.degree();
  const PolyA& a = deg.degree.gen();
  const SkewPoly eta = exact_right_quotient(iso.source().phi(a), iso.mu());
  if (!(iso.mu() * eta == iso.target().phi(a)))
    fail(ErrorCode::InternalInconsistency, "μη != ψ_{a_n}");
  Isogeny out(iso.target(), iso.source(), eta);
  if (!(out.degree().degree == deg.degree)) fail(ErrorCode::InternalInconsistency, "deg η != deg μ");
  return out;
}

Isogeny compose(const Isogeny& g, const Isogeny& f) {
  if (!(f.target() == g.source())) fail(ErrorCode::ChainMismatch, "target of the first isogeny is not the source of the second");
  Isogeny h(f.source(), g.target(), g.mu() * f.mu());
  if (f.certificate()) h = h.with_certificate(*f.certificate());
  if (f.source().rank() == 2) {
    if (!(h.degree().degree == g.degree().degree * f.degree().degree))
      fail(ErrorCode::InternalInconsistency, "degree is not multiplicative along the chain");
  }
  return h;
}

unsigned delta_p(const Isogeny& iso, const PrimeIdealA& p) {
  if (!p.is_prime()) fail(ErrorCode::InvalidArgument, "δ_p needs a prime ideal");
  if (!is_primitive(iso)) fail(ErrorCode::NotPrimitive, "δ_p is defined through a primitive isogeny");
  return iso.degree().degree.valuation(p);
}

PrimaryProjection project_p(const Isogeny& iso, const PrimeIdealA& p) {
  if (!p.is_prime()) fail(ErrorCode::InvalidArgument, "projection needs a prime ideal");
  if (!is_cyclic(iso)) fail(ErrorCode::NotCyclic, "projection needs a cyclic isogeny");
  const unsigned k = iso.degree().degree.valuation(p);
  // the p-primary kernel is killed by p^k, so Ker μ ∩ φ[p^k] is all of it
  const SkewPoly mp = right_gcd(iso.mu(), iso.source().phi(pow(p.gen(), k)));
  const DrinfeldModule pi = quotient_module(iso.source(), mp);
  Isogeny p_part(iso.source(), pi, mp);
  if (iso.certificate()) p_part = p_part.with_certificate(*iso.certificate());
  Isogeny coprime_part(pi, iso.target(), exact_right_quotient(iso.mu(), mp));
  if (p_part.degree().degree.valuation(p) != k || coprime_part.degree().degree.valuation(p) != 0)
    fail(ErrorCode::InternalInconsistency, "p-primary split has the wrong degrees");
  return {pi, std::move(p_part), std::move(coprime_part)};
}

std::vector<Isogeny> factor_prime_power(const Isogeny& iso) {
  const IdealA deg = iso.degree().degree;
  if (deg.is_unit()) return {};
  const auto& fs = deg.factors();
  if (fs.size() != 1) fail(ErrorCode::NotPrimePower, "degree has several prime factors");
  if (!is_cyclic(iso)) fail(ErrorCode::NotCyclic, "factorization into p-isogenies needs a cyclic isogeny");
  const PolyA& p = fs.front().prime;
  const unsigned n = fs.front().multiplicity;
  std::vector<Isogeny> out;
  Isogeny rest = iso;
  for (unsigned i = 1; i < n; ++i) {
    const SkewPoly m = right_gcd(rest.mu(), rest.source().phi(p));
    const DrinfeldModule pi = quotient_module(rest.source(), m);
    out.emplace_back(rest.source(), pi, m);
    rest = Isogeny(pi, iso.target(), exact_right_quotient(rest.mu(), m));
  }
  out.push_back(std::move(rest));
  for (const auto& f : out)
    if (!(f.degree().degree == IdealA(p))) fail(ErrorCode::InternalInconsistency, "factor of the wrong degree");
  return out;
}

Isogeny quotient_isogeny(const DrinfeldModule& phi, const SkewPoly& m) {
  return Isogeny(phi, quotient_module(phi, m), m);
}

Isogeny kernel_sum(const std::vector<Isogeny>& parts) {
  if (parts.empty()) fail(ErrorCode::InvalidArgument, "kernel sum of no isogenies");
  if (parts.size() == 1) return parts.front();
  const DrinfeldModule& phi = parts.front().source();
  std::vector<IdealA> degs;
  for (const auto& f : parts) {
    if (!(f.source() == phi)) fail(ErrorCode::ChainMismatch, "kernel sum needs a common source");
    degs.push_back(f.degree().degree);
  }
  for (std::size_t i = 0; i < degs.size(); ++i)
    for (std::size_t j = i + 1; j < degs.size(); ++j)
      if (!gcd(degs[i], degs[j]).is_unit()) fail(ErrorCode::InvalidArgument, "kernel sum needs coprime degrees");
  std::optional<SkewPoly> g;
  IdealA total = IdealA::unit(phi.field().fq());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    IdealA others = IdealA::unit(phi.field().fq());
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (j != i) others = others * degs[j];
    const SkewPoly m = parts[i].mu() * phi.phi(others.gen());
    g = g ? right_gcd(*g, m) : m;
    total = total * degs[i];
  }
  Isogeny out = quotient_isogeny(phi, *g);
  if (parts.front().certificate()) out = out.with_certificate(*parts.front().certificate());
  if (!(out.degree().degree == total)) fail(ErrorCode::InternalInconsistency, "kernel sum has the wrong degree");
  return out;
}

IsogenySearch find_isogenies(const DrinfeldModule& phi, const DrinfeldModule& psi, int N, const SearchOptions& options) {
  auto found = find_intertwiners(phi, psi, N, options);
  IsogenySearch out;
  out.bound = found.bound;
  out.completeness = found.completeness;
  for (auto& u : found.basis) out.basis.emplace_back(phi, psi, std::move(u));
  return out;
}

NormalizedIsogeny normalize_isogeny(const Isogeny& iso, const GaloisDatum& galois) {
  if (&galois.field() != &iso.source().field()) fail(ErrorCode::FieldMismatch, "Galois datum acts on another field");
  if (!is_primitive(iso)) fail(ErrorCode::NotPrimitive, "normalization needs a primitive isogeny");
  auto fixed = [&](const SkewPoly& a) {
    for (std::size_t i = 0; i < galois.num_generators(); ++i)
      for (const auto& c : a.coeffs())
        if (!(galois.apply_generator(i, c) == c)) return false;
    return true;
  };
  if (!fixed(iso.source().phiT()) || !fixed(iso.target().phiT()))
    fail(ErrorCode::InvalidArgument, "source and target must have Galois-fixed coefficients");

  const FqField& F = iso.source().field().fq();
  const ExtElem c0 = iso.mu().differential();
  NormalizedIsogeny out{1, c0, iso.mu(), {}};
  for (const auto& s : galois.elements()) {
    const ExtElem xi = galois.apply(s, c0) / c0;
    if (!xi.is_fq() || !(conjugate(galois, s, iso.mu()) == iso.mu().left_scaled(xi)))
      fail(ErrorCode::NotScalarConjugate, "conjugate by " + galois.element_name(s) + " is not an F_q^×-multiple of μ");
    out.character.emplace(s, xi.fq_value());
    out.n = std::lcm(out.n, F.multiplicative_order(xi.fq_value()));
  }
  for (const auto& [s, xs] : out.character)
    for (const auto& [t, xt] : out.character)
      if (out.character.at(galois.compose(s, t)) != F.mul(xs, xt))
        fail(ErrorCode::InternalInconsistency, "s ↦ ξ_s is not a homomorphism");
  out.lambda = c0.pow_u(out.n);
  out.mu_normalized = iso.mu().left_scaled(c0.inverse());
  for (std::size_t i = 0; i < galois.num_generators(); ++i)
    if (!(galois.apply_generator(i, out.lambda) == out.lambda))
      fail(ErrorCode::InternalInconsistency, "λ = c0^n is not Galois-fixed");
  if (!fixed(out.mu_normalized)) fail(ErrorCode::InternalInconsistency, "normalized isogeny is not Galois-fixed");
  return out;
}

}  // namespace dforge
