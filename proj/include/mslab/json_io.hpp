#pragma once

#include <json.hpp>

#include "mslab/certlab.hpp"
#include "mslab/radlab.hpp"

namespace mslab {

using Json = nlohmann::json;

/// Rationals and big integers travel as strings ("-3/4"); small counters as numbers.
Json certificate_to_json(const Certificate& cert);
/// Throws PARSE_ERROR on missing or malformed fields.
Certificate certificate_from_json(const Json& j);

/// {"modulus": [["t", 1], ["t - 1", 1]], "vbar_basis": [[1, 1]]}; vector
/// entries are integers or rational strings.
CofiniteSubspace cofinite_from_json(const Json& j);
Json cofinite_to_json(const CofiniteSubspace& v);

}  // namespace mslab
