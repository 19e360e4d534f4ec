#include "gravspin/config.hpp"
#include "gravspin/validate.hpp"
#include "gravspin/version.hpp"
#include "gravspin/workflows.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>

namespace {

int emit(const gravspin::CurveTable& table, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << gravspin::to_csv(table);
  } else {
    gravspin::write_table(table, out_path);
  }
  return 0;
}

int run_curve_workflow(const std::string& workflow, const std::string& config_path,
                       const std::string& out_path) {
  gravspin::ScenarioConfig config;
  if (!config_path.empty()) {
    config = gravspin::load_config(config_path);
  }
  config.workflow = workflow;
  return emit(gravspin::run_workflow(config), out_path);
}

int run_validate() {
  const auto results = gravspin::run_validation_suite();
  bool all_pass = true;
  for (const auto& check : results) {
    all_pass = all_pass && check.pass;
    std::printf("%-24s %s  residual=%.3e  tol=%.1e\n", check.name.c_str(),
                check.pass ? "PASS" : "FAIL", check.residual, check.tolerance);
    if (!check.detail.empty()) {
      std::printf("    %s\n", check.detail.c_str());
    }
  }
  std::printf("%zu/%zu checks passed\n",
              static_cast<std::size_t>(
                  std::count_if(results.begin(), results.end(),
                                [](const auto& c) { return c.pass; })),
              results.size());
  return all_pass ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spin decoherence of wave packets on circular orbits around a "
               "Schwarzschild mass"};
  app.set_version_flag("--version", std::string("gravspin ") + gravspin::kVersion);
  app.require_subcommand(1);

  std::string out_path;
  std::string config_path;
  std::string run_config_path;

  auto* fig1 = app.add_subcommand(
      "fig1", "Entropy-vs-time curve for a circular-orbit wave packet");
  fig1->add_option("--config", config_path, "Optional key = value config file");
  fig1->add_option("--out", out_path, "Output CSV path (default: stdout)");

  auto* fig2 = app.add_subcommand(
      "fig2", "Decoherence rate |B| tau_s versus r_s/r");
  fig2->add_option("--config", config_path, "Optional key = value config file");
  fig2->add_option("--out", out_path, "Output CSV path (default: stdout)");

  auto* run = app.add_subcommand("run", "Run the workflow selected by a config file");
  run->add_option("config", run_config_path, "key = value config file")->required();
  run->add_option("--out", out_path, "Output CSV path (default: stdout)");

  auto* validate = app.add_subcommand(
      "validate", "Run the physics validation suite and report each check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (fig1->parsed()) {
      return run_curve_workflow("fig1", config_path, out_path);
    }
    if (fig2->parsed()) {
      return run_curve_workflow("fig2", config_path, out_path);
    }
    if (run->parsed()) {
      gravspin::ScenarioConfig config = gravspin::load_config(run_config_path);
      return emit(gravspin::run_workflow(config), out_path);
    }
    if (validate->parsed()) {
      return run_validate();
    }
  } catch (const gravspin::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const gravspin::ChartError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
