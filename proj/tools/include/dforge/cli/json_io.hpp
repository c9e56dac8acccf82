#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include <dforge/galois.hpp>
#include <dforge/ideal.hpp>
#include <dforge/isogeny.hpp>

namespace dforge::cli {

using Json = nlohmann::ordered_json;

/// Malformed job document. `path` locates the offending value ("modules.phi").
class InputError : public std::runtime_error {
 public:
  InputError(std::string path, const std::string& what)
      : std::runtime_error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

std::string join_path(const std::string& path, const std::string& key);
std::string join_path(const std::string& path, std::size_t index);

const Json& member(const Json& object, const std::string& key, const std::string& path);
const Json* optional_member(const Json& object, const std::string& key, const std::string& path);
std::string as_string(const Json& j, const std::string& path);
std::uint64_t as_unsigned(const Json& j, const std::string& path);
const Json& as_array(const Json& j, const std::string& path);

PolyA poly_from_json(const FqFieldPtr& F, const Json& j, const std::string& path);
RatFunc rat_from_json(const FqFieldPtr& F, const Json& j, const std::string& path);
IdealA ideal_from_json(const FqFieldPtr& F, const Json& j, const std::string& path);
/// A string expression in x and T, or a coordinate list over 1, x, ..., x^{e-1}.
ExtElem ext_from_json(const ExtField& K, const Json& j, const std::string& path);
SkewPoly skew_from_json(const ExtField& K, const Json& j, const std::string& path);

Json to_json(const ExtElem& a);
Json to_json(const Isogeny& iso);
Json field_to_json(const ExtField& K, const GaloisDatum* galois);

}  // namespace dforge::cli
