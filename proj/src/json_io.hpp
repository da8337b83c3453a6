#pragma once

#include <json.hpp>

#include "arrangement.hpp"

namespace qch {

using Json = nlohmann::json;

// Arrangement file schema:
//   {"name": "...", "ring": {"type": "Z"} | {"type": "quadratic", "d": -5},
//    "vectors": [column, ...], "rank": l}
// A column is a list of entries, one per ambient coordinate; entries are
// plain integers over Z and pairs [a, b] meaning a + b*w over a quadratic
// ring. "rank" is required only when "vectors" is empty.
Arrangement parse_arrangement(const std::string& text);
Json arrangement_json(const Arrangement& a);

// Ideal spec: a bare integer (Z only) or a JSON list of generators in the
// entry syntax above, e.g. [[2,0],[1,-1]].
Ideal parse_ideal_spec(const RingSpec& ring, const std::string& text);

Json ring_json(const RingSpec& ring);
Json ideal_json(const Ideal& a);
Json unipoly_json(const UniPoly& p, const std::string& var = "t");
Json bipoly_json(const BiPoly& p, const std::string& var1 = "t", const std::string& var2 = "x");

}  // namespace qch
