#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "phasegraph/curve.hpp"
#include "phasegraph/field.hpp"
#include "phasegraph/graph.hpp"

namespace phasegraph {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text_file(const std::string& path);
nlohmann::json read_json_file(const std::string& path);

/// {"n": 4, "poly": [1,1,0,0,1], "basis": ["s^3", ...]}, poly low degree first.
nlohmann::json field_to_json(const Field& field);
FieldPtr field_from_json(const nlohmann::json& j);
FieldPtr load_field(const std::string& path);
/// Path of the shipped spec for n, under the data directory.
std::string builtin_field_path(int n);

/// A field reference: an integer n (built-in spec), a path string (relative
/// paths resolve against base_dir), or an inline spec object.
FieldPtr resolve_field_ref(const nlohmann::json& ref, const std::string& base_dir);

/// {"field": <ref>, "phi": ["s^7", "0", ...]}, phi_0 first. The field is
/// written as n when it equals the built-in spec, otherwise inline.
nlohmann::json curve_to_json(const Curve& c);
/// `fallback` is used when the document has no "field" entry.
Curve curve_from_json(const nlohmann::json& j, FieldPtr fallback, const std::string& base_dir = ".");

/// {"n": 4, "edges": [[1,2], ...]}, 1-based, sorted.
nlohmann::json graph_to_json(const AdjacencyMatrix& g);
AdjacencyMatrix graph_from_json(const nlohmann::json& j);

}  // namespace phasegraph
