#pragma once

// Canonical JSON encodings. Coefficients are exact decimal strings, never
// floating point; key order is fixed so identical inputs serialize to
// identical bytes.

#include "mz/certify.hpp"
#include "mz/dynatomic.hpp"
#include "mz/newton.hpp"
#include "mz/orbit.hpp"
#include "mz/poly.hpp"

#include <json.hpp>

namespace mz {

using Json = nlohmann::ordered_json;

// {"variable": "a"|"b"|"x", "coefficients": [decimal strings, ascending]}
Json to_json(const IntPoly& f);
IntPoly intpoly_from_json(const Json& j);

// {"prime", "zero_prefix", "vertices": [[i, v]...], "segments": [{"slope": "h/l", "hlen"}...]}
Json to_json(const NewtonPolygon& np);

// {"d", "m", "variable", "misiurewicz", "pre_misiurewicz", "q_factor", "sigma", "tau", ...}
Json to_json(const MisiurewiczBundle& bundle);

// {"verdict", "method", "prime", "polygon", "excluded_roots", "primes_tried", "content", ...}
Json to_json(const Certificate& cert);

Json to_json(const OrbitReport& rep);

} // namespace mz
