#include "dforge/cli/json_io.hpp"

#include <dforge/errors.hpp>
#include <dforge/text.hpp>

namespace dforge::cli {

namespace {

template <class F>
auto parsing(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw InputError(path, e.what());
  }
}

}  // namespace

std::string join_path(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

std::string join_path(const std::string& path, std::size_t index) { return path + "[" + std::to_string(index) + "]"; }

const Json& member(const Json& object, const std::string& key, const std::string& path) {
  const Json* j = optional_member(object, key, path);
  if (!j) throw InputError(join_path(path, key), "missing");
  return *j;
}

const Json* optional_member(const Json& object, const std::string& key, const std::string& path) {
  if (!object.is_object()) throw InputError(path, "expected an object");
  const auto it = object.find(key);
  return it == object.end() ? nullptr : &*it;
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw InputError(path, "expected a string");
  return j.get<std::string>();
}

std::uint64_t as_unsigned(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned()) throw InputError(path, "expected a nonnegative integer");
  return j.get<std::uint64_t>();
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path, "expected an array");
  return j;
}

PolyA poly_from_json(const FqFieldPtr& F, const Json& j, const std::string& path) {
  const std::string s = as_string(j, path);
  return parsing(path, [&] { return parse_poly(F, s); });
}

RatFunc rat_from_json(const FqFieldPtr& F, const Json& j, const std::string& path) {
  const std::string s = as_string(j, path);
  return parsing(path, [&] { return parse_rat(F, s); });
}

IdealA ideal_from_json(const FqFieldPtr& F, const Json& j, const std::string& path) {
  const std::string s = as_string(j, path);
  return parsing(path, [&] { return parse_ideal(F, s); });
}

ExtElem ext_from_json(const ExtField& K, const Json& j, const std::string& path) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    return parsing(path, [&] { return parse_ext(K, s); });
  }
  as_array(j, path);
  if (j.size() > K.degree()) throw InputError(path, "more coordinates than the degree of K");
  std::vector<RatFunc> coords;
  for (std::size_t i = 0; i < j.size(); ++i) coords.push_back(rat_from_json(K.fq_ptr(), j[i], join_path(path, i)));
  coords.resize(K.degree(), RatFunc(K.fq()));
  return K.from_coords(std::move(coords));
}

SkewPoly skew_from_json(const ExtField& K, const Json& j, const std::string& path) {
  const std::string s = as_string(j, path);
  return parsing(path, [&] { return parse_skew(K, s); });
}

Json to_json(const ExtElem& a) {
  Json out = Json::array();
  for (const auto& c : a.coords()) out.push_back(to_text(c));
  return out;
}

Json to_json(const Isogeny& iso) {
  const IsogenyDegree d = iso.degree();
  Json out;
  out["source"] = to_text(iso.source().phiT());
  out["target"] = to_text(iso.target().phiT());
  out["mu"] = to_text(iso.mu());
  out["degree"] = to_text(d.degree);
  out["n1"] = to_text(d.n1);
  out["n2"] = to_text(d.n2);
  out["certificate_bound"] = iso.certificate() ? Json(iso.certificate()->bound) : Json(nullptr);
  return out;
}

Json field_to_json(const ExtField& K, const GaloisDatum* galois) {
  Json out;
  out["p"] = K.fq().characteristic();
  out["fq_modulus"] = K.fq().modulus();
  Json ext = Json::array();
  for (const auto& c : K.modulus()) ext.push_back(to_text(c));
  out["extension"] = ext;
  if (galois) {
    Json gens = Json::array();
    for (const auto& g : galois->generators()) {
      Json e;
      e["name"] = g.name;
      e["image"] = to_json(g.image);
      e["order"] = g.order;
      gens.push_back(e);
    }
    out["galois"] = gens;
  }
  return out;
}

}  // namespace dforge::cli
