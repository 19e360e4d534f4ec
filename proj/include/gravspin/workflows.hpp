#pragma once

#include "gravspin/config.hpp"
#include "gravspin/table.hpp"

// Canned result-producing workflows behind the CLI subcommands.

namespace gravspin {

// Entropy-vs-time curve S'(tau) for the configured circular-orbit scenario.
// Columns: tau_over_tau_s, then S_approx and/or S_exact depending on mode.
// In `both` mode the metadata records max_abs_mode_delta, the largest
// pointwise difference between the two curves.
CurveTable run_fig1(const ScenarioConfig& config);

// Decoherence rate |B| tau_s versus r_s/r at fixed v/c and w/mc.
// Columns: rs_over_r, abs_B_tau_s.
CurveTable run_fig2(const ScenarioConfig& config);

// Dispatch on config.workflow.
CurveTable run_workflow(const ScenarioConfig& config);

} // namespace gravspin
