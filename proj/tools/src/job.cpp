#include "dforge/cli/job.hpp"

#include <dforge/errors.hpp>
#include <dforge/text.hpp>

namespace dforge::cli {

namespace {

const std::vector<std::string> kTopLevel{"command", "field", "modules", "isogenies", "orbit", "params"};

void reject_unknown(const Json& object, const std::vector<std::string>& known, const std::string& path) {
  for (const auto& [key, value] : object.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw InputError(join_path(path, key), "unknown key");
}

FqFieldPtr load_fq(const Json& f) {
  const auto p = as_unsigned(member(f, "p", "field"), "field.p");
  if (p > 65521) throw InputError("field.p", "characteristic too large");
  const Json* modulus = optional_member(f, "fq_modulus", "field");
  const Json* degree = optional_member(f, "fq_degree", "field");
  if (modulus && degree) throw InputError("field", "give fq_modulus or fq_degree, not both");
  if (modulus) {
    std::vector<std::uint32_t> m;
    for (std::size_t i = 0; i < as_array(*modulus, "field.fq_modulus").size(); ++i)
      m.push_back(std::uint32_t(as_unsigned((*modulus)[i], join_path("field.fq_modulus", i))));
    return FqField::create(std::uint32_t(p), std::move(m));
  }
  const auto d = degree ? as_unsigned(*degree, "field.fq_degree") : 1;
  if (d == 0 || d > 16) throw InputError("field.fq_degree", "expected 1..16");
  return FqField::with_degree(std::uint32_t(p), unsigned(d));
}

ExtFieldPtr load_extension(const FqFieldPtr& F, const Json& f) {
  const Json* ext = optional_member(f, "extension", "field");
  if (!ext) return ExtField::rational(F);
  std::vector<RatFunc> m;
  for (std::size_t i = 0; i < as_array(*ext, "field.extension").size(); ++i)
    m.push_back(rat_from_json(F, (*ext)[i], join_path("field.extension", i)));
  return ExtField::create(F, std::move(m));
}

std::optional<GaloisDatum> load_galois(const ExtFieldPtr& K, const Json& f) {
  const Json* gal = optional_member(f, "galois", "field");
  if (!gal) return std::nullopt;
  std::vector<GaloisGenerator> gens;
  for (std::size_t i = 0; i < as_array(*gal, "field.galois").size(); ++i) {
    const std::string path = join_path("field.galois", i);
    const Json& g = (*gal)[i];
    reject_unknown(g, {"name", "image", "order"}, path);
    const auto order = as_unsigned(member(g, "order", path), join_path(path, "order"));
    if (order == 0 || order > 1024) throw InputError(join_path(path, "order"), "expected 1..1024");
    gens.push_back({as_string(member(g, "name", path), join_path(path, "name")),
                    ext_from_json(*K, member(g, "image", path), join_path(path, "image")), std::uint32_t(order)});
  }
  return GaloisDatum(K, std::move(gens));
}

OrbitDatum load_metrics(const FqFieldPtr& F, const Json& o) {
  OrbitDatum d;
  d.field = F;
  for (std::size_t i = 0; i < as_array(member(o, "labels", "orbit"), "orbit.labels").size(); ++i)
    d.labels.push_back(as_string(o["labels"][i], join_path("orbit.labels", i)));
  for (std::size_t i = 0; i < as_array(member(o, "generators", "orbit"), "orbit.generators").size(); ++i) {
    const std::string path = join_path("orbit.generators", i);
    const Json& g = o["generators"][i];
    reject_unknown(g, {"name", "permutation", "order"}, path);
    OrbitGenerator gen;
    gen.name = as_string(member(g, "name", path), join_path(path, "name"));
    const Json& perm = as_array(member(g, "permutation", path), join_path(path, "permutation"));
    for (std::size_t k = 0; k < perm.size(); ++k)
      gen.permutation.push_back(std::size_t(as_unsigned(perm[k], join_path(join_path(path, "permutation"), k))));
    gen.order = std::uint32_t(as_unsigned(member(g, "order", path), join_path(path, "order")));
    d.generators.push_back(std::move(gen));
  }
  const Json& metrics = member(o, "metrics", "orbit");
  if (!metrics.is_object()) throw InputError("orbit.metrics", "expected an object");
  for (const auto& [key, matrix] : metrics.items()) {
    const std::string path = join_path("orbit.metrics", key);
    const IdealA p = [&] {
      try {
        return parse_ideal(F, key);
      } catch (const ParseError& e) {
        throw InputError(path, std::string("key ") + e.what());
      }
    }();
    if (!p.is_prime()) fail(ErrorCode::InvalidArgument, path + ": " + key + " is not prime");
    DistanceMatrix D;
    for (std::size_t r = 0; r < as_array(matrix, path).size(); ++r) {
      const std::string row_path = join_path(path, r);
      D.emplace_back();
      for (std::size_t c = 0; c < as_array(matrix[r], row_path).size(); ++c)
        D.back().push_back(unsigned(as_unsigned(matrix[r][c], join_path(row_path, c))));
    }
    if (!d.metrics.emplace(p, std::move(D)).second) throw InputError(path, "prime listed twice");
  }
  return d;
}

std::vector<std::string> name_list(const Json& o, const std::string& key, const std::string& path) {
  std::vector<std::string> out;
  const std::string p = join_path(path, key);
  for (std::size_t i = 0; i < as_array(member(o, key, path), p).size(); ++i) out.push_back(as_string(o[key][i], join_path(p, i)));
  return out;
}

}  // namespace

const DrinfeldModule& module_named(const JobDocument& doc, const std::string& name, const std::string& path) {
  const auto it = doc.modules.find(name);
  if (it == doc.modules.end()) throw InputError(path, "no module named '" + name + "'");
  return it->second;
}

const IsogenyEntry& isogeny_named(const JobDocument& doc, const std::string& name, const std::string& path) {
  const auto it = doc.isogenies.find(name);
  if (it == doc.isogenies.end()) throw InputError(path, "no isogeny named '" + name + "'");
  return it->second;
}

JobDocument load_job(const Json& j) {
  if (!j.is_object()) throw InputError("", "the job document must be an object");
  reject_unknown(j, kTopLevel, "");
  JobDocument doc;
  if (const Json* c = optional_member(j, "command", "")) doc.command = as_string(*c, "command");

  const Json& f = member(j, "field", "");
  reject_unknown(f, {"p", "fq_modulus", "fq_degree", "extension", "galois"}, "field");
  doc.fq = load_fq(f);
  doc.K = load_extension(doc.fq, f);
  doc.galois = load_galois(doc.K, f);

  if (const Json* mods = optional_member(j, "modules", "")) {
    if (!mods->is_object()) throw InputError("modules", "expected an object");
    for (const auto& [name, text] : mods->items())
      doc.modules.emplace(name, DrinfeldModule(skew_from_json(*doc.K, text, join_path("modules", name))));
  }
  if (const Json* isos = optional_member(j, "isogenies", "")) {
    if (!isos->is_object()) throw InputError("isogenies", "expected an object");
    for (const auto& [name, entry] : isos->items()) {
      const std::string path = join_path("isogenies", name);
      reject_unknown(entry, {"source", "target", "mu"}, path);
      const std::string s = as_string(member(entry, "source", path), join_path(path, "source"));
      const std::string t = as_string(member(entry, "target", path), join_path(path, "target"));
      const DrinfeldModule& src = module_named(doc, s, join_path(path, "source"));
      const DrinfeldModule& tgt = module_named(doc, t, join_path(path, "target"));
      const SkewPoly mu = skew_from_json(*doc.K, member(entry, "mu", path), join_path(path, "mu"));
      doc.isogenies.emplace(name, IsogenyEntry{s, t, Isogeny(src, tgt, mu)});
    }
  }
  if (const Json* o = optional_member(j, "orbit", "")) {
    OrbitSpec spec;
    if (optional_member(*o, "metrics", "orbit")) {
      reject_unknown(*o, {"labels", "generators", "metrics"}, "orbit");
      spec.metrics = load_metrics(doc.fq, *o);
    } else {
      reject_unknown(*o, {"conjugates", "isogenies"}, "orbit");
      spec.conjugates = name_list(*o, "conjugates", "orbit");
      spec.isogenies = name_list(*o, "isogenies", "orbit");
      for (std::size_t i = 0; i < spec.conjugates.size(); ++i)
        module_named(doc, spec.conjugates[i], join_path("orbit.conjugates", i));
      for (std::size_t i = 0; i < spec.isogenies.size(); ++i)
        isogeny_named(doc, spec.isogenies[i], join_path("orbit.isogenies", i));
    }
    doc.orbit = std::move(spec);
  }
  if (const Json* p = optional_member(j, "params", "")) {
    if (!p->is_object()) throw InputError("params", "expected an object");
    doc.params = *p;
  }
  return doc;
}

Json dump_job(const JobDocument& doc) {
  Json out;
  if (!doc.command.empty()) out["command"] = doc.command;
  out["field"] = field_to_json(*doc.K, doc.galois ? &*doc.galois : nullptr);
  if (!doc.modules.empty()) {
    Json mods = Json::object();
    for (const auto& [name, phi] : doc.modules) mods[name] = to_text(phi.phiT());
    out["modules"] = mods;
  }
  if (!doc.isogenies.empty()) {
    Json isos = Json::object();
    for (const auto& [name, e] : doc.isogenies) {
      Json entry;
      entry["source"] = e.source;
      entry["target"] = e.target;
      entry["mu"] = to_text(e.iso.mu());
      isos[name] = entry;
    }
    out["isogenies"] = isos;
  }
  if (doc.orbit) {
    Json o;
    if (doc.orbit->metrics) {
      const OrbitDatum& d = *doc.orbit->metrics;
      o["labels"] = d.labels;
      Json gens = Json::array();
      for (const auto& g : d.generators) {
        Json e;
        e["name"] = g.name;
        e["permutation"] = g.permutation;
        e["order"] = g.order;
        gens.push_back(e);
      }
      o["generators"] = gens;
      Json metrics = Json::object();
      for (const auto& [p, D] : d.metrics) metrics[to_text(p)] = D;
      o["metrics"] = metrics;
    } else {
      o["conjugates"] = doc.orbit->conjugates;
      o["isogenies"] = doc.orbit->isogenies;
    }
    out["orbit"] = o;
  }
  if (!doc.params.empty()) out["params"] = doc.params;
  return out;
}

}  // namespace dforge::cli
