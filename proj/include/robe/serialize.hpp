#pragma once

#include <json.hpp>

#include "robe/critical_mass.hpp"
#include "robe/dynamics.hpp"
#include "robe/equilibria.hpp"
#include "robe/stability.hpp"
#include "robe/sweep.hpp"

// JSON views of every report type. Keys are emitted in a fixed order
// (nlohmann::ordered_json) so identical inputs serialize byte-identically;
// complex numbers are [re, im] pairs; absent optionals are null.

namespace robe {

using Json = nlohmann::ordered_json;

Json to_json(const ModelParams& par);
ModelParams params_from_json(const Json& j);

Json to_json(const EquilibriumPoint& eq);
EquilibriumPoint equilibrium_from_json(const Json& j);

Json to_json(const Linearization& lin);
Linearization linearization_from_json(const Json& j);

Json to_json(const StabilityReport& rep);
StabilityReport stability_from_json(const Json& j);

Json to_json(const CriticalMassReport& rep);
CriticalMassReport critical_mass_from_json(const Json& j);

Json to_json(const Trajectory& traj);
Trajectory trajectory_from_json(const Json& j);

Json to_json(const ProbeReport& rep);

Json to_json(const SweepRecord& rec);
SweepRecord sweep_record_from_json(const Json& j);
Json to_json(const std::vector<SweepRecord>& records);
std::vector<SweepRecord> sweep_records_from_json(const Json& j);

}  // namespace robe
