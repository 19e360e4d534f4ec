#pragma once

#include "gravspin/schwarzschild.hpp"

#include <stdexcept>
#include <string>

// Flat key = value configuration for the workflow runner. '#' starts a
// comment; whitespace around keys and values is ignored; unknown or
// duplicated keys are validation errors naming the offending field.

namespace gravspin {

struct ConfigError : std::invalid_argument {
  std::string field;
  ConfigError(std::string field_, const std::string& why)
      : std::invalid_argument(field_.empty() ? why : field_ + ": " + why),
        field(std::move(field_)) {}
};

struct ScenarioConfig {
  std::string workflow = "fig1"; // fig1 | fig2

  // Shared scenario knobs.
  double rs_over_r = 0.9;
  double v_over_c = 0.8;
  double w_over_mc = 0.1;

  // Quadrature.
  std::string grid_kind = "gauss_hermite"; // gauss_hermite | trapezoid
  int grid_nodes = 129;
  double span_sigmas = 8.0;

  // Entropy-curve workflow (fig1), times in units of tau_s.
  std::string mode = "both"; // approx | exact | both
  double tau_min_over_tau_s = 0.0;
  double tau_max_over_tau_s = 6.0;
  int tau_count = 121;

  // Rate-sweep workflow (fig2) over x = r_s/r.
  double sweep_min = 0.005;
  double sweep_max = 0.999;
  int sweep_count = 199;

  // Throws ConfigError on any out-of-domain field for the selected workflow.
  void validate() const;

  GridSpec grid_spec() const;
  SchwarzschildScenario scenario() const;
};

// Parse from config-file text. Throws ConfigError on malformed lines,
// unknown keys, duplicate keys, or unparseable values.
ScenarioConfig parse_config(const std::string& text);

// Read and parse a config file. Throws std::runtime_error if unreadable.
ScenarioConfig load_config(const std::string& path);

// Deterministic round-trippable rendering (fixed key order, 17 significant
// digits for reals): parse_config(serialize_config(c)) reproduces c.
std::string serialize_config(const ScenarioConfig& config);

} // namespace gravspin
