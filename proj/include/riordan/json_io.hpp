#pragma once

#include <json.hpp>

#include <string>

#include "riordan/decompose.hpp"
#include "riordan/matrix.hpp"

namespace riordan {

using Json = nlohmann::ordered_json;

/*
 * Matrix document:
 *   {"order": n, "d": ["1","1",...], "h": ["0","1",...],
 *    "rows": [["1"],["1","-1"],...]}
 * Rationals are serialized as "p/q" or integer strings, never floats.
 * Loading validates shape and the (d, h) preconditions but trusts the entry
 * grid, so textual corruption is observable through vertical_check.
 */
Json matrix_to_json(const RiordanMatrix& m);
RiordanMatrix matrix_from_json(const Json& doc);

RiordanMatrix matrix_from_json_text(const std::string& text);

// One row per line, entries space-separated.
std::string matrix_to_triangle(const RiordanMatrix& m);

// Header "row,col,value", one lower-triangular entry per line.
std::string matrix_to_csv(const RiordanMatrix& m);

// {"target": doc, "factors": [doc...], "verified": bool, "widths": k}
Json certificate_to_json(const FactorizationCertificate& cert);

}  // namespace riordan
