#pragma once

#include <string>

#include "eud/design.hpp"

namespace eud {

/// Design file format (JSON):
///   { "dimension": n, "points": [["x","y",...],...], "weights": ["w",...] }
/// Numbers are decimal strings to keep files diff-stable and precise.
WeightedPointSet read_design(const std::string& path);
WeightedPointSet parse_design(const std::string& json_text);
void write_design(const WeightedPointSet& X, const std::string& path);
std::string design_to_json(const WeightedPointSet& X);

/// Decimal-string round trip for long double values (21 significant digits).
std::string real_to_string(Real v);
Real string_to_real(const std::string& s);

}  // namespace eud
