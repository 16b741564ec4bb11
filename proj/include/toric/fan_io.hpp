#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "toric/polyhedra.hpp"

namespace toric {

/// Fan file: UTF-8 JSON with fields `lattice_rank`, `rays` (integer entries,
/// quoted strings allowed for values past 64 bits), `maximal_cones` (lists
/// of 0-based ray indices) and an optional `name`.  Face closure is always
/// recomputed, never trusted from the file.
struct ParsedFan {
  Fan fan;
  std::string name;
  std::vector<std::string> warnings;  // e.g. non-primitive rays normalized
};

ParsedFan parse_fan_file(const std::string& path);
ParsedFan parse_fan_text(const std::string& text, const std::string& origin);

/// Canonical machine-readable form: rays primitivized in lex order, cones as
/// sorted ray index sets sorted lexicographically.  Byte-reproducible.
nlohmann::ordered_json fan_to_json(const Fan& f, const std::string& name);

/// Integer entry as a JSON value: a number when it fits in 64 bits, a
/// decimal string otherwise.
nlohmann::ordered_json json_int(const Int& v);
nlohmann::ordered_json json_vector(const IntVec& v);

}  // namespace toric
