#pragma once

#include <filesystem>
#include <vector>

#include "cdatc/monte_carlo.hpp"
#include "cdatc/scenario.hpp"

namespace cdatc {

// Writes the result files for one invocation into out_dir:
//   nmsd.csv            step, scheme, nmsd_db
//   thresholds.csv      step, node, tau   (censoring-active schemes)
//   transmit_rates.csv  scheme, node, transmit_rate, stall_rate
//   summary.json        effective config + steady-state figures per scheme
//   effective_scenario.scn   re-parseable effective configuration
// Numeric fields carry full decimal precision; row order is deterministic,
// so identical results produce byte-identical files.
void emit_results(const ScenarioSpec& effective,
                  const std::vector<MonteCarloResult>& results,
                  const std::filesystem::path& out_dir);

} // namespace cdatc
