#pragma once

#include <json.hpp>

#include "pathint/controlled.hpp"
#include "pathint/rough_path.hpp"
#include "pathint/roughness.hpp"
#include "pathint/running_integral.hpp"

namespace pathint {

using json = nlohmann::ordered_json;

json to_json(const ConvergenceReport& rep);
json to_json(const RieReport& rep);
json to_json(const IntegralResult& res);
json to_json(const EquivalenceAudit& audit);
json to_json(const InvarianceReport& rep);
json to_json(const RoughnessSide& side);

}  // namespace pathint
