#include "gravspin/workflows.hpp"

#include "gravspin/version.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace gravspin {

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  }
  // Land on the stated endpoints exactly so table rows match the request.
  out.front() = lo;
  out.back() = hi;
  return out;
}

void stamp_metadata(CurveTable& table, const ScenarioConfig& config) {
  table.metadata.emplace_back("tool", "gravspin");
  table.metadata.emplace_back("version", kVersion);
  // Echo the full configuration so the file is self-describing and
  // reproducible; deliberately no timestamp, output must be byte-stable.
  std::istringstream lines(serialize_config(config));
  std::string line;
  while (std::getline(lines, line)) {
    const auto eq = line.find(" = ");
    if (eq != std::string::npos) {
      table.metadata.emplace_back(line.substr(0, eq), line.substr(eq + 3));
    }
  }
}

} // namespace

CurveTable run_fig1(const ScenarioConfig& config_in) {
  ScenarioConfig config = config_in;
  config.workflow = "fig1";
  config.validate();

  const SchwarzschildScenario s = config.scenario();
  const double tau_s = s.tau_s();
  const std::vector<double> units =
      linspace(config.tau_min_over_tau_s, config.tau_max_over_tau_s,
               config.tau_count);
  std::vector<double> taus(units.size());
  for (std::size_t i = 0; i < units.size(); ++i) {
    taus[i] = units[i] * tau_s;
  }

  const bool want_approx = config.mode == "approx" || config.mode == "both";
  const bool want_exact = config.mode == "exact" || config.mode == "both";
  std::vector<double> s_approx, s_exact;
  if (want_approx) {
    s_approx = entropy_curve(s, taus, EntropyMode::approx, config.grid_spec(),
                             Exec::parallel);
  }
  if (want_exact) {
    s_exact = entropy_curve(s, taus, EntropyMode::exact, config.grid_spec(),
                            Exec::parallel);
  }

  CurveTable table;
  stamp_metadata(table, config);
  table.columns.push_back("tau_over_tau_s");
  if (want_approx) {
    table.columns.push_back("S_approx");
  }
  if (want_exact) {
    table.columns.push_back("S_exact");
  }
  if (want_approx && want_exact) {
    double delta = 0.0;
    for (std::size_t i = 0; i < units.size(); ++i) {
      delta = std::max(delta, std::abs(s_approx[i] - s_exact[i]));
    }
    table.metadata.emplace_back("max_abs_mode_delta", format_value(delta));
  }
  for (std::size_t i = 0; i < units.size(); ++i) {
    std::vector<double> row{units[i]};
    if (want_approx) {
      row.push_back(s_approx[i]);
    }
    if (want_exact) {
      row.push_back(s_exact[i]);
    }
    table.add_row(row);
  }
  return table;
}

CurveTable run_fig2(const ScenarioConfig& config_in) {
  ScenarioConfig config = config_in;
  config.workflow = "fig2";
  config.validate();

  const std::vector<double> xs =
      linspace(config.sweep_min, config.sweep_max, config.sweep_count);
  const std::vector<double> rates = decoherence_rate_curve(
      xs, config.v_over_c, config.w_over_mc, Exec::parallel);

  CurveTable table;
  stamp_metadata(table, config);
  table.columns = {"rs_over_r", "abs_B_tau_s"};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    table.add_row({xs[i], rates[i]});
  }
  return table;
}

CurveTable run_workflow(const ScenarioConfig& config) {
  config.validate();
  if (config.workflow == "fig2") {
    return run_fig2(config);
  }
  return run_fig1(config);
}

} // namespace gravspin
