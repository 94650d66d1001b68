#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "hurwitz/class_function.hpp"
#include "hurwitz/datum.hpp"
#include "hurwitz/group.hpp"

namespace hurwitz::io {

using json = nlohmann::json;

// Permutations are image arrays (0-based). Groups are
// {"degree": n, "generators": [[...], ...]}. Parse failures throw
// Error(Schema) with the offending field path in the message.

/// Parses text, reporting line/column on syntax errors.
json parse(std::string_view text, std::string_view source = "<input>");
json read_file(const std::string& path);

json to_json(const Perm& p);
Perm perm_from_json(const json& j, const std::string& path = "$");

json to_json(const PermGroup& g);
Group group_from_json(const json& j, const std::string& path = "$");

/// {"group": ..., "components": [{"genus": h, "handles": [[a, b], ...],
///  "points": [{"kind": "cyclic"|"dihedral"|"node", "m": [...], "s": [...], "node": id}]}]}
json to_json(const BoundaryDatum& d);
BoundaryDatum datum_from_json(const json& j);
/// Reuses an existing group; group fields in `j` are ignored.
BoundaryDatum datum_from_json(const json& j, const Group& group);

/// {"group": ..., "tuple": [[...], ...]}
json to_json(const HurwitzTuple& t);
HurwitzTuple tuple_from_json(const json& j);

/// [{"order": o, "size": n, "representative": [...]}, ...] in class order.
json class_table(const PermGroup& g);
json to_json(const ClassFunction& f);

}  // namespace hurwitz::io
