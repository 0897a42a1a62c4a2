#pragma once

// JSON forms of the domain objects.
//
//   rational     "num/den" or "num"
//   point        ["x", "y", "z"]
//   line         {"coeffs": ["a", "b", "c"]}
//   arrangement  {"seed": k, "lines": [line, ...]}
//   scheme       {"points": [{"coords": point, "mult": m}, ...]}
//   reduction    {"entries": [d_1, ...], "full": bool}
//   trace        {"steps": [{"n", "h_n", "s_n", "t_n", "merges": [{"i", "j"}]}],
//                 "doubles": D, "reduced": R, "terminal_step": n}

#include <json.hpp>

#include "fatpoints/builder.hpp"
#include "fatpoints/geometry.hpp"
#include "fatpoints/hf_core.hpp"
#include "fatpoints/scheme.hpp"

namespace fatpoints::json_io {

using nlohmann::json;

json to_json(const Rational& q);
json to_json(const ProjPoint& p);
json to_json(const ProjLine& l);
json to_json(const Arrangement& arr);
json to_json(const FatPointScheme& z);
json to_json(const ReductionVector& rv);
json to_json(const DeltaH& d);
json to_json(const HilbertFunction& h);
/// Trace plus the double / reduced counts of the resulting scheme.
json to_json(const ConstructionTrace& trace, const LabeledScheme& result);
/// Arrangement, scheme and the line labels of every point.
json to_json(const LabeledScheme& z);

// Readers throw ParseError on malformed input.
Rational rational_from_json(const json& j);
ProjPoint point_from_json(const json& j);
/// Accepts {"coeffs": [...]} or a bare 3-array.
ProjLine line_from_json(const json& j);
/// Accepts an arrangement object (seed optional) or a bare array of lines.
Arrangement arrangement_from_json(const json& j);
/// Accepts a scheme object, or any object carrying one under "scheme".
FatPointScheme scheme_from_json(const json& j);
DeltaH delta_from_json(const json& j);

}  // namespace fatpoints::json_io
