// JSON document format for algebras.
//
// {
//   "vertices": ["1", "2", ...],
//   "arrows":   [{"name": "a", "source": "1", "target": "2", "degree": 0}, ...],
//   "relations": [["a", "b"], ...]
// }
//
// The canonical serializer keeps declaration order and is byte-stable:
// parsing its own output round-trips exactly.

#pragma once

#include <string>

#include "json.hpp"
#include "qga/quiver.hpp"

namespace qga {

using json = nlohmann::ordered_json;

Algebra parse_algebra(const json& doc);
Algebra parse_algebra_string(const std::string& text);
Algebra load_algebra_file(const std::string& path);

json algebra_to_json(const Algebra& a);
std::string serialize_algebra(const Algebra& a);  // canonical, 2-space indent

}  // namespace qga
