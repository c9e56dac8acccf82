#include "dforge/cli/commands.hpp"

#include <exception>
#include <functional>
#include <random>
#include <thread>

#include <dforge/errors.hpp>
#include <dforge/moduli.hpp>
#include <dforge/text.hpp>

namespace dforge::cli {

namespace {

constexpr int kMaxSearchBound = 64;

// f(0..n-1) on up to `jobs` threads; results in index order, and the error of
// the lowest failing index is rethrown so the outcome does not depend on jobs.
std::vector<Json> parallel_map(std::size_t n, unsigned jobs, const std::function<Json(std::size_t)>& f) {
  std::vector<Json> out(n);
  std::vector<std::exception_ptr> errors(n);
  auto worker = [&](std::size_t first) {
    for (std::size_t i = first; i < n; i += jobs) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, unsigned(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

template <class Map>
std::vector<std::string> selected(const Map& objects, const Json& params, const std::string& key, const char* what) {
  if (const Json* name = optional_member(params, key, "params")) {
    const std::string s = as_string(*name, "params." + key);
    if (!objects.contains(s)) throw InputError("params." + key, std::string("no ") + what + " named '" + s + "'");
    return {s};
  }
  std::vector<std::string> out;
  for (const auto& [k, v] : objects) out.push_back(k);
  return out;
}

std::string required_name(const Json& params, const std::string& key) {
  return as_string(member(params, key, "params"), "params." + key);
}

SearchOptions search_options(const JobDocument& doc) {
  SearchOptions opts;
  if (doc.K->is_rational()) return opts;
  opts.candidates.emplace();
  if (const Json* c = optional_member(doc.params, "candidates", "params"))
    for (std::size_t i = 0; i < as_array(*c, "params.candidates").size(); ++i)
      opts.candidates->push_back(ext_from_json(*doc.K, (*c)[i], join_path("params.candidates", i)));
  return opts;
}

PrimeIdealA prime_param(const JobDocument& doc, const std::string& key) {
  const IdealA p = ideal_from_json(doc.fq, member(doc.params, key, "params"), "params." + key);
  if (!p.is_prime()) fail(ErrorCode::InvalidArgument, to_text(p) + " is not prime");
  return p;
}

Json factors_json(const IdealA& n, Rng& rng) {
  Json out = Json::array();
  for (const auto& f : factor_ideal(n, rng)) {
    Json e;
    e["prime"] = to_text(IdealA(f.prime));
    e["exponent"] = f.multiplicity;
    out.push_back(e);
  }
  return out;
}

Json theta_json(const ThetaPair& t) {
  Json out;
  out["j_source"] = to_json(t.j_source);
  out["j_target"] = to_json(t.j_target);
  return out;
}

Json center_json(const SubTree& t, const Center& c, const std::vector<std::string>& labels) {
  Json out;
  out["kind"] = c.is_edge ? "edge" : "vertex";
  std::vector<std::size_t> vs{c.u};
  if (c.is_edge) vs.push_back(c.v);
  out["vertices"] = vs;
  Json at = Json::array();
  for (std::size_t v : vs) {
    Json names = Json::array();
    for (std::size_t i = 0; i < t.label_vertex.size(); ++i)
      if (t.label_vertex[i] == v) names.push_back(labels[i]);
    at.push_back(names);
  }
  out["labels"] = at;
  return out;
}

Json cmd_verify(const JobDocument& doc, const RunOptions& o) {
  const auto names = selected(doc.isogenies, doc.params, "isogeny", "isogeny");
  const auto results = parallel_map(names.size(), o.jobs, [&](std::size_t i) {
    const IsogenyEntry& e = doc.isogenies.at(names[i]);
    const Isogeny iso = verify_isogeny(doc.modules.at(e.source), doc.modules.at(e.target), e.iso.mu());
    Json r;
    r["source"] = e.source;
    r["target"] = e.target;
    r["intertwines"] = true;
    r["tau_degree"] = iso.tau_degree();
    r["degree"] = to_text(iso.degree().degree);
    return r;
  });
  Json out = Json::object();
  for (std::size_t i = 0; i < names.size(); ++i) out[names[i]] = results[i];
  return {{"isogenies", out}};
}

Json cmd_degree(const JobDocument& doc, const RunOptions& o) {
  const auto names = selected(doc.isogenies, doc.params, "isogeny", "isogeny");
  const auto results = parallel_map(names.size(), o.jobs, [&](std::size_t i) {
    const Isogeny& iso = doc.isogenies.at(names[i]).iso;
    const IsogenyDegree d = iso.degree();
    std::seed_seq seq{std::uint64_t(o.seed), std::uint64_t(i)};
    Rng rng(seq);
    Json r;
    r["degree"] = to_text(d.degree);
    r["n1"] = to_text(d.n1);
    r["n2"] = to_text(d.n2);
    r["factors"] = factors_json(d.degree, rng);
    try {
      r["cyclic"] = is_cyclic(certify(iso, o));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::MissingCertificate) throw;
      r["cyclic"] = nullptr;
    }
    return r;
  });
  Json out = Json::object();
  for (std::size_t i = 0; i < names.size(); ++i) out[names[i]] = results[i];
  return {{"isogenies", out}};
}

Json cmd_dual(const JobDocument& doc, const RunOptions& o) {
  const auto names = selected(doc.isogenies, doc.params, "isogeny", "isogeny");
  const auto results =
      parallel_map(names.size(), o.jobs, [&](std::size_t i) { return to_json(dual(doc.isogenies.at(names[i]).iso)); });
  Json out = Json::object();
  for (std::size_t i = 0; i < names.size(); ++i) out[names[i]] = results[i];
  return {{"duals", out}};
}

Json cmd_j(const JobDocument& doc, const RunOptions& o) {
  const auto names = selected(doc.modules, doc.params, "module", "module");
  const auto results = parallel_map(names.size(), o.jobs, [&](std::size_t i) {
    const ExtElem j = doc.modules.at(names[i]).j_invariant();
    Json r;
    r["j"] = to_json(j);
    r["j_text"] = to_text(j);
    r["in_Q"] = j.is_rational();
    return r;
  });
  Json out = Json::object();
  for (std::size_t i = 0; i < names.size(); ++i) out[names[i]] = results[i];
  return {{"modules", out}};
}

Json cmd_find(const JobDocument& doc, const RunOptions&) {
  const auto& phi = module_named(doc, required_name(doc.params, "source"), "params.source");
  const auto& psi = module_named(doc, required_name(doc.params, "target"), "params.target");
  const auto bound = as_unsigned(member(doc.params, "bound", "params"), "params.bound");
  if (bound > kMaxSearchBound) throw InputError("params.bound", "at most " + std::to_string(kMaxSearchBound));
  const IsogenySearch found = find_isogenies(phi, psi, int(bound), search_options(doc));
  Json basis = Json::array();
  for (const auto& iso : found.basis) basis.push_back(to_json(iso));
  Json out;
  out["bound"] = found.bound;
  out["complete"] = found.completeness == SearchCompleteness::Complete;
  out["basis"] = basis;
  return out;
}

Json cmd_project(const JobDocument& doc, const RunOptions& o) {
  const Isogeny iso = certify(isogeny_named(doc, required_name(doc.params, "isogeny"), "params.isogeny").iso, o);
  const PrimeIdealA p = prime_param(doc, "prime");
  const PrimaryProjection pr = project_p(iso, p);
  const unsigned delta = pr.p_part.degree().degree.valuation(p);
  Json steps = Json::array();
  if (delta > 0)
    for (const auto& s : factor_prime_power(pr.p_part.with_certificate(*iso.certificate())))
      steps.push_back(to_text(s.mu()));
  Json out;
  out["prime"] = to_text(p);
  out["delta"] = delta;
  out["target"] = to_text(pr.target.phiT());
  out["p_part"] = to_json(pr.p_part);
  out["coprime_part"] = to_json(pr.coprime_part);
  out["p_steps"] = steps;
  return out;
}

Json cmd_classify(const JobDocument& doc, const RunOptions& o) {
  if (!doc.orbit) throw InputError("orbit", "missing");
  OrbitDatum d;
  std::vector<std::string> names;
  if (doc.orbit->metrics) {
    d = *doc.orbit->metrics;
    names = d.labels;
  } else {
    if (!doc.galois) throw InputError("field.galois", "conjugate orbits need Galois data");
    std::vector<DrinfeldModule> conj;
    for (const auto& n : doc.orbit->conjugates) conj.push_back(doc.modules.at(n));
    std::map<std::pair<std::size_t, std::size_t>, Isogeny> isos;
    auto index_of = [&](const std::string& n, const std::string& path) {
      const auto it = std::find(doc.orbit->conjugates.begin(), doc.orbit->conjugates.end(), n);
      if (it == doc.orbit->conjugates.end()) throw InputError(path, "module '" + n + "' is not a listed conjugate");
      return std::size_t(it - doc.orbit->conjugates.begin());
    };
    for (std::size_t i = 0; i < doc.orbit->isogenies.size(); ++i) {
      const std::string path = join_path("orbit.isogenies", i);
      const IsogenyEntry& e = doc.isogenies.at(doc.orbit->isogenies[i]);
      isos.insert_or_assign({index_of(e.source, path), index_of(e.target, path)}, certify(e.iso, o));
    }
    d = orbit_from_isogenies(conj, isos, *doc.galois);
    names = doc.orbit->conjugates;
  }
  const ClassificationResult r = classify(d);
  const MinimalityReport report = minimality_check(d, r);

  Json out;
  out["n"] = to_text(r.n);
  out["squarefree"] = r.n.is_squarefree();
  Json centers = Json::object();
  for (const auto& [p, c] : r.centers) centers[to_text(p)] = center_json(r.subtrees.at(p), c, names);
  out["centers"] = centers;
  Json m = Json::object();
  for (const auto& [s, div] : r.m) m[orbit_element_name(d, s)] = to_text(div);
  out["m"] = m;
  Json minimality;
  minimality["ok"] = report.ok;
  minimality["violations"] = report.violations;
  out["minimality"] = minimality;
  if (!d.modules.empty()) {
    const MaterializedCenter c = materialize_center(d, r);
    Json center;
    center["psi"] = to_text(c.psi.phiT());
    center["iso"] = to_json(c.iso);
    out["center_isogeny"] = center;
  }
  return out;
}

Json cmd_star_orbit(const JobDocument& doc, const RunOptions& o) {
  const ModuliPoint x(certify(isogeny_named(doc, required_name(doc.params, "isogeny"), "params.isogeny").iso, o));
  const StarOrbit orbit = star_orbit(x, doc.galois ? &*doc.galois : nullptr);
  Json points = Json::array();
  for (const auto& [w, wx] : orbit.translates) {
    Json pt;
    pt["w"] = to_string(w);
    pt["n"] = to_text(wx.n());
    pt["iso"] = to_json(wx.iso());
    pt["theta"] = theta_json(theta(wx));
    points.push_back(pt);
  }
  Json out;
  out["n"] = to_text(x.n());
  out["size"] = orbit.size;
  out["cm"] = orbit.cm;
  out["points"] = points;
  Json dx = Json::array();
  for (const auto& w : orbit.stabilizer) dx.push_back(to_string(w));
  out["D_x"] = dx;
  if (orbit.galois) {
    Json m = Json::object();
    for (const auto& [s, w] : orbit.m_map) m[orbit.galois->element_name(s)] = to_string(w);
    out["m_map"] = m;
    const DescentData dd = descent_data(orbit);
    Json hom = Json::object();
    for (const auto& [s, w] : dd.hom) hom[orbit.galois->element_name(s)] = to_string(w);
    Json descent;
    descent["hom"] = hom;
    descent["image_order"] = dd.image_order;
    descent["degree_bound"] = dd.bound;
    out["descent"] = descent;
  }
  return out;
}

using Handler = Json (*)(const JobDocument&, const RunOptions&);

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> table{
      {"verify", cmd_verify},   {"degree", cmd_degree},     {"dual", cmd_dual},
      {"j", cmd_j},             {"find", cmd_find},         {"project", cmd_project},
      {"classify", cmd_classify}, {"star-orbit", cmd_star_orbit},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& job_commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, h] : handlers()) out.push_back(n);
    return out;
  }();
  return names;
}

Isogeny certify(const Isogeny& iso, const RunOptions& options) {
  const int bound = options.certify_bound.value_or(iso.tau_degree());
  if (iso.certificate() && iso.certificate()->bound >= bound) return iso;
  SearchOptions opts;
  if (!iso.source().field().is_rational()) opts.candidates = std::vector<ExtElem>{};
  const auto cert = certify_non_cm(iso.source(), bound, opts);
  if (!cert)
    fail(ErrorCode::MissingCertificate,
         "the source has endomorphisms beyond φ_A up to τ-degree " + std::to_string(bound));
  return iso.with_certificate(*cert);
}

Json run_command(const std::string& command, const JobDocument& doc, const RunOptions& options) {
  if (!doc.command.empty() && doc.command != command)
    throw InputError("command", "document is for '" + doc.command + "', not '" + command + "'");
  for (const auto& [name, handler] : handlers()) {
    if (name != command) continue;
    Json out;
    out["command"] = command;
    out["field"] = field_to_json(*doc.K, doc.galois ? &*doc.galois : nullptr);
    out["result"] = handler(doc, options);
    return out;
  }
  throw InputError("command", "unknown command '" + command + "'");
}

}  // namespace dforge::cli
