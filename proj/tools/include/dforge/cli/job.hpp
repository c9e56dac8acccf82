#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <dforge/tree.hpp>

#include "dforge/cli/json_io.hpp"

namespace dforge::cli {

struct IsogenyEntry {
  std::string source, target;  // module names
  Isogeny iso;
};

/// Either explicit metric data or conjugate modules with isogenies between them.
struct OrbitSpec {
  std::optional<OrbitDatum> metrics;
  std::vector<std::string> conjugates;
  std::vector<std::string> isogenies;
};

/// {command?, field, modules?, isogenies?, orbit?, params?}. Modules and
/// isogenies are keyed by name; isogenies and orbits refer to modules by name.
struct JobDocument {
  std::string command;
  FqFieldPtr fq;
  ExtFieldPtr K;
  std::optional<GaloisDatum> galois;
  std::map<std::string, DrinfeldModule> modules;
  std::map<std::string, IsogenyEntry> isogenies;
  std::optional<OrbitSpec> orbit;
  Json params = Json::object();
};

/// Throws InputError for schema and text problems and Error when the objects
/// are mathematically invalid (e.g. NotIntertwining).
JobDocument load_job(const Json& doc);
/// Canonical form: load_job(dump_job(d)) reproduces d and dumps identically.
Json dump_job(const JobDocument& doc);

const DrinfeldModule& module_named(const JobDocument& doc, const std::string& name, const std::string& path);
const IsogenyEntry& isogeny_named(const JobDocument& doc, const std::string& name, const std::string& path);

}  // namespace dforge::cli
