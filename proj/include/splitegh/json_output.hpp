#pragma once

#include <json.hpp>

#include "splitegh/egh.hpp"

namespace splitegh {

nlohmann::json to_json(const HilbertFunction& h);
nlohmann::json to_json(const DegreeStep& step);
nlohmann::json to_json(const VerificationReport& report);
/// {"schema": 1, "hilbert": [...], "generators": [...], "verified": ..., "report": {...}}
nlohmann::json egh_json(const EghResult& result);

}  // namespace splitegh
