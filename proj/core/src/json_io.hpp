// Internal JSON (de)serialization for configs and diagnostics state.
// Not installed; keeps the vendor dependency out of public headers.
#pragma once

#include <json.hpp>

#include "mbspec/integrate.hpp"

namespace mbspec {

using nlohmann::json;

json to_json(const SimConfig& cfg);
SimConfig sim_config_from_json(const json& j);

json to_json(const InitialSpec& init);
InitialSpec initial_spec_from_json(const json& j);

json to_json(const RunOptions& opts);
RunOptions run_options_from_json(const json& j);

json to_json(const DiagState& st);
DiagState diag_state_from_json(const json& j);

/// {"sim": ..., "init": ...} — the physical-parameter echo embedded in
/// every output artifact.
json physical_echo(const SimConfig& cfg, const InitialSpec& init);

}  // namespace mbspec
