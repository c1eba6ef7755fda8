#pragma once

#include <json.hpp>
#include <string>

#include "anticyc/pair.hpp"

namespace anticyc {

using json = nlohmann::json;

json class_to_json(const LatticeClass& x);
/// Accepts an array of integers (numbers, or decimal strings for values
/// outside the int64 range). expected_dim < 0 skips the dimension check.
LatticeClass class_from_json(const json& j, int expected_dim = -1);

json pair_to_json(const CyclePair& pair);
/// Parses and validates; when a blowup history is present, replays it from
/// the base pair and requires the recorded components to match.
CyclePair pair_from_json(const json& j);

void save_pair(const CyclePair& pair, const std::string& path);
CyclePair load_pair(const std::string& path);

/// Row-major array of arrays; must be a pairing-preserving integer matrix.
IntegerIsometry isometry_from_json(const json& j);
IntegerIsometry load_isometry(const std::string& path);

/// Command line forms: a JSON array like [3,-1,-1] or a bare comma list
/// like 3,-1,-1.
LatticeClass parse_class_arg(const std::string& text, int dim);

}  // namespace anticyc
