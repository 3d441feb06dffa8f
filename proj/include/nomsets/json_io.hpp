#pragma once

#include <json.hpp>

#include "nomsets/free.hpp"
#include "nomsets/orbit.hpp"
#include "nomsets/value.hpp"

namespace nomsets {

/// Value trees as JSON with node kinds atom|label|tuple|tagged.
nlohmann::json to_json(const Value& v);

/// {"key": ..., "support_size": ...}
nlohmann::json to_json(const OrbitShape& s);

/// {"base": <orbit key>, "images": [atom ids]}
nlohmann::json to_json(const FreeElem& e);

}  // namespace nomsets
