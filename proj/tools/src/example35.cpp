#include <functional>

#include <dforge/errors.hpp>
#include <dforge/text.hpp>
#include <dforge/tree.hpp>

#include "dforge/cli/commands.hpp"

namespace dforge::cli {

namespace {

std::pair<std::uint32_t, unsigned> prime_power(std::uint64_t q) {
  if (q < 2 || q > (1u << 16)) fail(ErrorCode::InvalidArgument, "q must be a prime power below 2^16");
  std::uint64_t p = 2;
  while (q % p) ++p;
  unsigned d = 0;
  for (std::uint64_t r = q; r > 1; r /= p) {
    if (r % p) fail(ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime power");
    ++d;
  }
  return {std::uint32_t(p), d};
}

struct Checks {
  Json list = Json::array();
  bool all = true;

  void run(const std::string& name, const std::function<bool(Json&)>& body) {
    Json entry;
    entry["name"] = name;
    Json detail = Json::object();
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const Error& e) {
      detail["error"] = e.what();
    }
    entry["pass"] = ok;
    if (!detail.empty()) entry["detail"] = detail;
    list.push_back(entry);
    all = all && ok;
  }
};

}  // namespace

Json example35_report(std::uint64_t q, const RunOptions& options) {
  const auto [p, d] = prime_power(q);
  if (p == 2) fail(ErrorCode::EvenCharacteristicUnsupported, "the example needs q odd");
  const FqFieldPtr F = FqField::with_degree(p, d);
  const ExtFieldPtr K = ExtField::create(F, {parse_rat(F, "-T - 1"), parse_rat(F, "0"), parse_rat(F, "1")});
  const GaloisDatum G(K, {GaloisGenerator{"s", -K->gen(), 2}});
  const GroupElem s = G.generator(0);
  const SkewPoly mu = parse_skew(*K, "x + 1 - t");
  const SkewPoly eta = parse_skew(*K, "x - 1 + t");
  const DrinfeldModule phi(mu * eta);
  const DrinfeldModule sphi = conjugate_module(G, s, phi);
  const PrimeIdealA T = parse_ideal(F, "T");

  Json out;
  out["q"] = q;
  out["field"] = field_to_json(*K, &G);
  out["phi"] = to_text(phi.phiT());
  out["sphi"] = to_text(sphi.phiT());
  out["mu"] = to_text(mu);
  out["eta"] = to_text(eta);

  Checks checks;
  checks.run("mu intertwines sphi and phi", [&](Json&) { return mu * sphi.phiT() == phi.phiT() * mu; });
  checks.run("sphi_T = eta*mu", [&](Json&) { return sphi.phiT() == eta * mu; });
  checks.run("phi is not Q-rational", [&](Json&) { return !(sphi == phi); });
  checks.run("j = -(2 + x - x^q)^(q+1)", [&](Json& detail) {
    const ExtElem a = K->gen();
    const ExtElem expected = -(K->from_fq(F->from_int(2)) + a - a.frobenius()).pow_u(q + 1);
    const ExtElem j = phi.j_invariant();
    detail["j"] = to_text(j);
    return j == expected;
  });
  checks.run("j is not in Q", [&](Json&) { return !phi.j_invariant().coord(1).is_zero(); });
  checks.run("deg mu = deg eta = (T)", [&](Json& detail) {
    const Isogeny m(sphi, phi, mu), e(phi, sphi, eta);
    detail["deg_mu"] = to_text(m.degree().degree);
    detail["deg_eta"] = to_text(e.degree().degree);
    return m.degree().degree == T && e.degree().degree == T;
  });
  checks.run("dual(mu) = c*eta with c in F_q^*", [&](Json& detail) {
    const SkewPoly dm = dual(Isogeny(sphi, phi, mu)).mu();
    const ExtElem c = dm.lead() / eta.lead();
    detail["dual_mu"] = to_text(dm);
    return c.is_fq() && dm == eta.left_scaled(c);
  });
  checks.run("classify gives n = (T), m_s = (T)", [&](Json& detail) {
    const Isogeny m = certify(Isogeny(sphi, phi, mu), options);
    const OrbitDatum orbit = orbit_from_isogenies({phi, sphi}, {{{1, 0}, m}}, G);
    const ClassificationResult r = classify(orbit);
    const IdealA ms = r.m.at(s);
    detail["n"] = to_text(r.n);
    detail["m_s"] = to_text(ms);
    out["n"] = to_text(r.n);
    out["m"] = Json{{G.element_name(s), to_text(ms)}};
    return r.n == T && ms == T && minimality_check(orbit, r).ok;
  });
  out["checks"] = checks.list;
  out["all_pass"] = checks.all;
  return out;
}

}  // namespace dforge::cli
