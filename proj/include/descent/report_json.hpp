#pragma once

#include <json.hpp>

#include "descent/cyclic.hpp"
#include "descent/matching.hpp"
#include "descent/symfun.hpp"

namespace descent {

using Json = nlohmann::ordered_json;

/// {identity, params{n,k,j}, ok, witness_diff, elapsed_ms, counts, ...extra}.
/// Unset parameters serialize as null.
Json to_json(const VerifyResult& r);
/// {set_id, axioms{extension,equivariance,non_escher}, witnesses, orbit_sizes}.
Json to_json(const CdesReport& r);
/// {"n": 8, "arcs": [[1,6],[3,4],[5,7]]}.
Json to_json(const Matching& m);
Matching matching_from_json(const Json& j);

}  // namespace descent
