#pragma once

#include "gravspin/schwarzschild.hpp"

#include <string>
#include <vector>

// Physics validation suite: every check is a numerical identity the library
// must satisfy, with an explicit tolerance. The CLI `validate` subcommand and
// the acceptance harness both run these.

namespace gravspin {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail; // free-form context (scenario, grid, ...)
};

// Maximum angle-law residual max_p |theta(W(Lambda(tau_p), p)) - Omega(p^3) tau_p|
// over an n_points grid spanning q^3 +/- halfwidth_w * w, where Lambda is the
// ordered-product integral of the supplied constant generator. Exposed
// separately so fault-injection tests can pass a corrupted generator.
double wigner_angle_law_residual(const SchwarzschildScenario& s,
                                 const Matrix4d& lambda_gen, double tau_p,
                                 int n_points = 33, double halfwidth_w = 4.0,
                                 int steps = 256);

// Same residual with Lambda built by the full numeric pipeline
// (infinitesimal_lt along the orbit -> integrate_lorentz).
double wigner_angle_law_residual_pipeline(const SchwarzschildScenario& s,
                                          double tau_p, int n_points = 33,
                                          double halfwidth_w = 4.0,
                                          int steps = 256);

// Individual checks (each returns one result; names are stable identifiers).
CheckResult check_vierbein_identity();
CheckResult check_static_limit();
CheckResult check_photon_sphere_null();
CheckResult check_wigner_angle_law();
CheckResult check_small_width_agreement();
CheckResult check_entropy_curve_shape();
CheckResult check_rate_curve_shape();
CheckResult check_momentum_eigenstate();
CheckResult check_rotation_invariance();
CheckResult check_group_closure();
CheckResult check_horizon_adjacent();

// All checks, in the order above.
std::vector<CheckResult> run_validation_suite();

} // namespace gravspin
