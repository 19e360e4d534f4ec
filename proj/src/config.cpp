#include "gravspin/config.hpp"

#include "gravspin/table.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <string>

namespace gravspin {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) {
    return "";
  }
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& field, const std::string& value) {
  std::size_t consumed = 0;
  double out = 0.0;
  try {
    out = std::stod(value, &consumed);
  } catch (const std::exception&) {
    throw ConfigError(field, "cannot parse '" + value + "' as a real number");
  }
  if (consumed != value.size()) {
    throw ConfigError(field, "trailing characters in '" + value + "'");
  }
  return out;
}

int parse_int(const std::string& field, const std::string& value) {
  std::size_t consumed = 0;
  long out = 0;
  try {
    out = std::stol(value, &consumed);
  } catch (const std::exception&) {
    throw ConfigError(field, "cannot parse '" + value + "' as an integer");
  }
  if (consumed != value.size()) {
    throw ConfigError(field, "trailing characters in '" + value + "'");
  }
  if (out < -1000000000L || out > 1000000000L) {
    throw ConfigError(field, "integer out of range");
  }
  return static_cast<int>(out);
}

} // namespace

void ScenarioConfig::validate() const {
  if (workflow != "fig1" && workflow != "fig2") {
    throw ConfigError("workflow", "must be 'fig1' or 'fig2', got '" + workflow + "'");
  }
  if (!(rs_over_r > 0.0 && rs_over_r < 1.0)) {
    throw ConfigError("rs_over_r", "must lie in (0, 1) exclusive");
  }
  if (!(v_over_c >= 0.0 && v_over_c < 1.0)) {
    throw ConfigError("v_over_c", "must lie in [0, 1)");
  }
  if (!(w_over_mc > 0.0)) {
    throw ConfigError("w_over_mc", "must be positive (tau_s must be finite)");
  }
  if (grid_kind != "gauss_hermite" && grid_kind != "trapezoid") {
    throw ConfigError("grid_kind", "must be 'gauss_hermite' or 'trapezoid'");
  }
  if (grid_nodes < 1 || grid_nodes % 2 == 0) {
    throw ConfigError("grid_nodes", "must be a positive odd count");
  }
  if (grid_kind == "gauss_hermite" && grid_nodes > 301) {
    throw ConfigError("grid_nodes", "gauss_hermite grids support at most 301 nodes");
  }
  if (grid_kind == "trapezoid" && grid_nodes < 3) {
    throw ConfigError("grid_nodes", "trapezoid grids need at least 3 nodes");
  }
  if (!(span_sigmas > 0.0)) {
    throw ConfigError("span_sigmas", "must be positive");
  }
  if (workflow == "fig1") {
    if (mode != "approx" && mode != "exact" && mode != "both") {
      throw ConfigError("mode", "must be 'approx', 'exact', or 'both'");
    }
    if (!(tau_min_over_tau_s >= 0.0)) {
      throw ConfigError("tau_min_over_tau_s", "must be >= 0");
    }
    if (!(tau_max_over_tau_s > tau_min_over_tau_s)) {
      throw ConfigError("tau_max_over_tau_s", "must exceed tau_min_over_tau_s");
    }
    if (tau_count < 2) {
      throw ConfigError("tau_count", "must be >= 2");
    }
  } else {
    if (!(sweep_min > 0.0)) {
      throw ConfigError("sweep_min", "must be > 0");
    }
    if (!(sweep_max < 1.0)) {
      throw ConfigError("sweep_max", "must be < 1");
    }
    if (!(sweep_min < sweep_max)) {
      throw ConfigError("sweep_max", "must exceed sweep_min");
    }
    if (sweep_count < 2) {
      throw ConfigError("sweep_count", "must be >= 2");
    }
  }
}

GridSpec ScenarioConfig::grid_spec() const {
  GridSpec spec;
  spec.kind = (grid_kind == "trapezoid") ? GridKind::trapezoid
                                         : GridKind::gauss_hermite;
  spec.nodes = grid_nodes;
  spec.span_sigmas = span_sigmas;
  return spec;
}

SchwarzschildScenario ScenarioConfig::scenario() const {
  return SchwarzschildScenario::from_dimensionless(rs_over_r, v_over_c, w_over_mc);
}

ScenarioConfig parse_config(const std::string& text) {
  ScenarioConfig config;
  std::set<std::string> seen;
  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') {
      continue;
    }
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      std::ostringstream msg;
      msg << "line " << line_no << " is not of the form key = value";
      throw ConfigError("", msg.str());
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      std::ostringstream msg;
      msg << "line " << line_no << " has an empty key";
      throw ConfigError("", msg.str());
    }
    if (!seen.insert(key).second) {
      throw ConfigError(key, "duplicate key");
    }
    if (key == "workflow") {
      config.workflow = value;
    } else if (key == "rs_over_r") {
      config.rs_over_r = parse_double(key, value);
    } else if (key == "v_over_c") {
      config.v_over_c = parse_double(key, value);
    } else if (key == "w_over_mc") {
      config.w_over_mc = parse_double(key, value);
    } else if (key == "grid_kind") {
      config.grid_kind = value;
    } else if (key == "grid_nodes") {
      config.grid_nodes = parse_int(key, value);
    } else if (key == "span_sigmas") {
      config.span_sigmas = parse_double(key, value);
    } else if (key == "mode") {
      config.mode = value;
    } else if (key == "tau_min_over_tau_s") {
      config.tau_min_over_tau_s = parse_double(key, value);
    } else if (key == "tau_max_over_tau_s") {
      config.tau_max_over_tau_s = parse_double(key, value);
    } else if (key == "tau_count") {
      config.tau_count = parse_int(key, value);
    } else if (key == "sweep_min") {
      config.sweep_min = parse_double(key, value);
    } else if (key == "sweep_max") {
      config.sweep_max = parse_double(key, value);
    } else if (key == "sweep_count") {
      config.sweep_count = parse_int(key, value);
    } else {
      throw ConfigError(key, "unknown key");
    }
  }
  return config;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) {
    throw std::runtime_error("load_config: cannot read " + path);
  }
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return parse_config(buffer.str());
}

std::string serialize_config(const ScenarioConfig& config) {
  std::ostringstream out;
  out << "workflow = " << config.workflow << "\n";
  out << "rs_over_r = " << format_value(config.rs_over_r) << "\n";
  out << "v_over_c = " << format_value(config.v_over_c) << "\n";
  out << "w_over_mc = " << format_value(config.w_over_mc) << "\n";
  out << "grid_kind = " << config.grid_kind << "\n";
  out << "grid_nodes = " << config.grid_nodes << "\n";
  out << "span_sigmas = " << format_value(config.span_sigmas) << "\n";
  out << "mode = " << config.mode << "\n";
  out << "tau_min_over_tau_s = " << format_value(config.tau_min_over_tau_s) << "\n";
  out << "tau_max_over_tau_s = " << format_value(config.tau_max_over_tau_s) << "\n";
  out << "tau_count = " << config.tau_count << "\n";
  out << "sweep_min = " << format_value(config.sweep_min) << "\n";
  out << "sweep_max = " << format_value(config.sweep_max) << "\n";
  out << "sweep_count = " << config.sweep_count << "\n";
  return out.str();
}

} // namespace gravspin
