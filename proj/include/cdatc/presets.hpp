#pragma once

#include <string>
#include <vector>

#include "cdatc/scenario.hpp"

namespace cdatc {

// Built-in experiment scenarios:
//   fig2a        NMSD comparison of all three schemes, harvest_prob 0.4
//   fig2b        same comparison at harvest_prob 0.8
//   fig3a        per-node censoring-threshold traces, harvest_prob 0.4
//   fig3b        same traces at harvest_prob 0.8
//   unconstrained  energy-unconstrained baseline alone
std::vector<std::string> preset_names();

// Throws UnknownPreset for anything not listed above.
ScenarioSpec preset_scenario(const std::string& name);

// The preset's scenario text (what preset_scenario parses).
std::string preset_text(const std::string& name);

} // namespace cdatc
