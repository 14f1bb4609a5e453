#pragma once

#include <json.hpp>

#include "thetakit/bounds.hpp"

namespace thetakit {

using Json = nlohmann::ordered_json;

// Rounds to 12 significant digits so serialised output is short and stable.
// Non-finite values become null.
Json number_json(double x);

Json to_json(const BoundReport& r);
// Throws std::invalid_argument when a required field is missing or malformed.
BoundReport bound_report_from_json(const Json& j);

}  // namespace thetakit
