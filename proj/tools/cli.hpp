#pragma once

// Command-line front end. run() is the whole program minus process exit, so
// tests can drive it in-process.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/builtins.hpp"
#include "toric/curves.hpp"
#include "toric/fan.hpp"
#include "toric/polytope.hpp"

namespace toric::cli {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

enum Exit : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Integers, or strings "p" / "p/q". Throws ParseError naming `path`.
Rational parse_rational(const json& value, const std::string& path);

/// {"dim": n, "facets": [{"normal": [...], "offset": ...}, ...]}
Polytope parse_polytope(const json& doc);
/// {"dim": n, "rays": [[...], ...], "max_cones": [[...], ...]}, 0-based. The
/// fan is validated; failures raise ValidationError.
Fan parse_fan(const json& doc);

struct DiscInput {
  std::optional<json> fan;  // builtin name or fan object, if present
  RealDiscLift lift;
  std::optional<std::vector<IntVector>> extension;
};

/// {"fan": ..., "components": [{"zero": true} | {"a": .., "complex_roots":
/// [[re, im], ...], "real_roots": [...]}], "extension": [[...], ...]}
DiscInput parse_disc(const json& doc);

json to_json(const Polytope& p);
json to_json(const Fan& f);

/// Reads and parses a JSON file. Throws ParseError with the parser position.
json load_json_file(const std::string& path);

struct Input {
  std::string source;                // "builtin:cp:2" or "file:<path>"
  std::optional<Polytope> polytope;  // absent for fan files
  std::optional<Fan> fan;            // absent for polytope files until needed
  std::string unit_name = "[X]";
  std::string real_name = "[R]";
};

/// The given fan, or the validated normal fan of the polytope.
Fan input_fan(const Input& in);

/// Exactly one of builtin / path must be set.
Input parse_input(const std::optional<std::string>& builtin_id,
                  const std::optional<std::string>& path);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
