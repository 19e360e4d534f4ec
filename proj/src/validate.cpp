#include "gravspin/validate.hpp"

#include "gravspin/workflows.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace gravspin {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  }
  return out;
}

// Signed rotation angle about the +2 axis, with a guard that the rotation
// axis really is the 2 axis.
double angle_about_axis2(const WignerRotation& w, bool& axis_ok) {
  const AxisAngle aa = rotation_angle_axis(w);
  const double ydot = aa.axis[1];
  axis_ok = std::abs(std::abs(ydot) - 1.0) <= 1e-6;
  return aa.angle * ydot;
}

double angle_law_residual_for(const Matrix4d& lambda_big,
                              const SchwarzschildScenario& s, double tau_p,
                              int n_points, double halfwidth_w) {
  const double q3 = s.q3();
  const double half = halfwidth_w * s.w;
  const std::vector<double> offsets = linspace(-half, half, n_points);
  double residual = 0.0;
  for (const double dp : offsets) {
    const double p3 = q3 + dp;
    const WignerRotation w =
        wigner_rotation(lambda_big, LocalMomentum::from_p3(p3, s.m));
    bool axis_ok = true;
    const double angle = angle_about_axis2(w, axis_ok);
    if (!axis_ok) {
      return 1.0 + std::abs(angle); // axis left the 2 direction: hard failure
    }
    residual = std::max(residual, std::abs(angle - omega(s, p3) * tau_p));
  }
  return residual;
}

} // namespace

double wigner_angle_law_residual(const SchwarzschildScenario& s,
                                 const Matrix4d& lambda_gen, double tau_p,
                                 int n_points, double halfwidth_w, int steps) {
  const LorentzTransform big = integrate_constant_generator(lambda_gen, tau_p, steps);
  return angle_law_residual_for(big.m, s, tau_p, n_points, halfwidth_w);
}

double wigner_angle_law_residual_pipeline(const SchwarzschildScenario& s,
                                          double tau_p, int n_points,
                                          double halfwidth_w, int steps) {
  const SpacetimeFrame frame = scenario_frame(s);
  const Trajectory traj = scenario_trajectory(s);
  const LorentzTransform big =
      integrate_lorentz(traj, frame, 0.0, tau_p, steps, Exec::serial, s.m);
  return angle_law_residual_for(big.m, s, tau_p, n_points, halfwidth_w);
}

CheckResult check_vierbein_identity() {
  CheckResult result{"vierbein_identity", 0.0, 1e-12, false,
                     "frame*g*frame^T = eta at 20 random points, r/r_s in (1.01, 100)"};
  const MetricSpec metric = schwarzschild_metric(1.0);
  const VierbeinField field = static_vierbein_field(1.0);
  std::mt19937_64 rng(20260817ULL);
  std::uniform_real_distribution<double> rand_r(1.01, 100.0);
  std::uniform_real_distribution<double> rand_theta(0.05, kPi - 0.05);
  std::uniform_real_distribution<double> rand_phi(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> rand_t(-50.0, 50.0);
  for (int i = 0; i < 20; ++i) {
    const SpacetimePoint x(rand_t(rng), rand_r(rng), rand_theta(rng), rand_phi(rng));
    result.residual =
        std::max(result.residual, verify_vierbein(metric, field.at(x), x));
  }
  result.pass = result.residual <= result.tolerance;
  return result;
}

CheckResult check_static_limit() {
  CheckResult result{"static_limit", 0.0, 1e-10, false,
                     "xi = 0 generator vanishes at 10 radii, r/r_s in (1.05, 80)"};
  const SpacetimeFrame frame = schwarzschild_frame(1.0);
  for (int k = 0; k < 10; ++k) {
    const double r = 1.05 * std::pow(80.0 / 1.05, k / 9.0);
    const Trajectory traj = circular_trajectory_schwarzschild(r, 1.0, 0.0);
    const Matrix4d lambda = infinitesimal_lt(traj, frame, 0.0);
    result.residual = std::max(result.residual, lambda.cwiseAbs().maxCoeff());
  }
  result.pass = result.residual <= result.tolerance;
  return result;
}

CheckResult check_photon_sphere_null() {
  CheckResult result{"photon_sphere_null", 0.0, 1e-10, false, ""};
  const SchwarzschildScenario s =
      SchwarzschildScenario::from_dimensionless(2.0 / 3.0, 0.8, 0.1);
  const double l_abs = std::abs(l_factor(s));
  const DecoherenceCoefficients c = small_w_coefficients(s);
  const double rate = std::abs(c.B) * c.tau_s;

  const SpacetimeFrame frame = scenario_frame(s);
  const Trajectory traj = scenario_trajectory(s);
  const WavePacket packet = gaussian_packet(s.q3(), s.w, s.m);
  double entropy_max = 0.0;
  for (const double tau : {s.tau_s(), 1e3 * s.tau_s()}) {
    const LorentzTransform big =
        integrate_lorentz(traj, frame, 0.0, tau, 4096, Exec::serial, s.m);
    entropy_max =
        std::max(entropy_max, von_neumann_entropy(evolve_spin(packet, big.m)));
  }

  const bool pass_l = l_abs <= 1e-12;
  const bool pass_rate = rate <= 1e-12;
  const bool pass_entropy = entropy_max <= 1e-10;
  result.residual = std::max({l_abs, rate, entropy_max});
  result.pass = pass_l && pass_rate && pass_entropy;
  std::ostringstream detail;
  detail << "r = 3 r_s / 2: |L| = " << l_abs << " (<= 1e-12), |B| tau_s = " << rate
         << " (<= 1e-12), pipeline S' = " << entropy_max
         << " (<= 1e-10 up to 1e3 tau_s)";
  result.detail = detail.str();
  return result;
}

CheckResult check_wigner_angle_law() {
  CheckResult result{"wigner_angle_law", 0.0, 1e-8, false,
                     "extracted angle vs Omega(p3) tau_p, 33-point grid, v/c = 0.8, "
                     "r_s/r in {0.3 (tau_p = 0.008), 0.9 (tau_p = 0.002)}"};
  for (const auto& [x, tau_p] :
       {std::pair{0.3, 0.008}, std::pair{0.9, 0.002}}) {
    const SchwarzschildScenario s =
        SchwarzschildScenario::from_dimensionless(x, 0.8, 0.1);
    result.residual = std::max(
        result.residual, wigner_angle_law_residual_pipeline(s, tau_p, 33, 4.0, 256));
  }
  result.pass = result.residual <= result.tolerance;
  return result;
}

CheckResult check_small_width_agreement() {
  CheckResult result{"small_width_agreement", 0.0, 0.01, false,
                     "closed-form phase average vs quadrature, w/mc = 0.05, "
                     "v/c in {0.2, 0.5, 0.8} x r_s/r in {0.1, 0.5, 0.9}, "
                     "tau up to min(1/|A|, 3/|B|)"};
  for (const double v : {0.2, 0.5, 0.8}) {
    for (const double x : {0.1, 0.5, 0.9}) {
      const SchwarzschildScenario s =
          SchwarzschildScenario::from_dimensionless(x, v, 0.05);
      const DecoherenceCoefficients c = small_w_coefficients(s);
      const double tau_max = std::min(1.0 / std::abs(c.A), 3.0 / std::abs(c.B));
      for (int j = 1; j <= 10; ++j) {
        const double tau = tau_max * j / 10.0;
        const double exact = exact_phase_average(s, tau);
        const double approx = phase_average_approx(c, tau);
        result.residual =
            std::max(result.residual, std::abs(approx - exact) / exact);
      }
    }
  }
  result.pass = result.residual <= result.tolerance;
  return result;
}

CheckResult check_entropy_curve_shape() {
  CheckResult result{"entropy_curve_shape", 0.0, 0.02, false, ""};
  ScenarioConfig config; // fig1 defaults: (v/c, r_s/r, w/mc) = (0.8, 0.9, 0.1)
  const CurveTable table = run_fig1(config);
  const int n = static_cast<int>(table.rows.size());

  bool starts_at_zero = true;
  bool monotone = true;
  double delta_max = 0.0;
  for (int i = 0; i < n; ++i) {
    const double s_approx = table.rows[i][1];
    const double s_exact = table.rows[i][2];
    delta_max = std::max(delta_max, std::abs(s_approx - s_exact));
    if (i == 0 && (s_approx > 1e-12 || s_exact > 1e-12)) {
      starts_at_zero = false;
    }
    if (i > 0 && (s_approx < table.rows[i - 1][1] - 1e-12 ||
                  s_exact < table.rows[i - 1][2] - 1e-12)) {
      monotone = false;
    }
  }
  const double final_exact = table.rows[n - 1][2];
  const double final_approx = table.rows[n - 1][1];
  const bool saturates = final_exact > 0.99 && final_approx > 0.99;

  result.residual = delta_max;
  result.pass = starts_at_zero && monotone && saturates && delta_max < 0.02;
  std::ostringstream detail;
  detail << "S'(0) = 0: " << (starts_at_zero ? "yes" : "NO")
         << ", monotone: " << (monotone ? "yes" : "NO") << ", S'("
         << table.rows[n - 1][0] << " tau_s) = " << final_exact
         << " (> 0.99), max |approx - exact| = " << delta_max << " (< 0.02)";
  result.detail = detail.str();
  return result;
}

CheckResult check_rate_curve_shape() {
  CheckResult result{"rate_curve_shape", 0.0, 1e-12, false, ""};

  // Inner branch (0, 2/3): positive with a single interior maximum.
  const std::vector<double> xs_inner = linspace(0.02, 0.664, 130);
  const std::vector<double> ys_inner = decoherence_rate_curve(xs_inner, 0.8, 0.1);
  int maxima = 0;
  int minima = 0;
  bool positive = true;
  for (std::size_t i = 0; i < ys_inner.size(); ++i) {
    if (ys_inner[i] <= 0.0) {
      positive = false;
    }
    if (i > 0 && i + 1 < ys_inner.size()) {
      if (ys_inner[i] > ys_inner[i - 1] && ys_inner[i] > ys_inner[i + 1]) {
        ++maxima;
      }
      if (ys_inner[i] < ys_inner[i - 1] && ys_inner[i] < ys_inner[i + 1]) {
        ++minima;
      }
    }
  }

  // Zero at exactly 2/3.
  const double at_two_thirds =
      decoherence_rate_curve({2.0 / 3.0}, 0.8, 0.1).front();

  // Outer branch (2/3, 1): monotone growth without bound toward the horizon.
  const std::vector<double> xs_outer{0.70, 0.85, 0.95, 0.99, 0.999, 0.9999};
  const std::vector<double> ys_outer = decoherence_rate_curve(xs_outer, 0.8, 0.1);
  bool outer_increasing = true;
  for (std::size_t i = 1; i < ys_outer.size(); ++i) {
    if (ys_outer[i] <= ys_outer[i - 1]) {
      outer_increasing = false;
    }
  }
  const bool diverges = ys_outer.back() > 30.0;

  result.residual = std::abs(at_two_thirds);
  result.pass = positive && maxima == 1 && minima == 0 &&
                at_two_thirds <= 1e-12 && outer_increasing && diverges;
  std::ostringstream detail;
  detail << "interior maxima on (0, 2/3): " << maxima << " (want 1), minima: "
         << minima << " (want 0), |B| tau_s at 2/3 = " << at_two_thirds
         << " (<= 1e-12), growth toward horizon: "
         << (outer_increasing ? "monotone" : "NOT monotone") << ", value at 0.9999 = "
         << ys_outer.back();
  result.detail = detail.str();
  return result;
}

CheckResult check_momentum_eigenstate() {
  CheckResult result{"momentum_eigenstate", 0.0, 1e-12, false,
                     "w = 0 packet stays pure through the full pipeline"};
  SchwarzschildScenario s = SchwarzschildScenario::from_dimensionless(0.9, 0.8, 0.1);
  s.w = 0.0;
  const SpacetimeFrame frame = scenario_frame(s);
  const Trajectory traj = scenario_trajectory(s);
  const WavePacket packet = gaussian_packet(s.q3(), 0.0, s.m);
  for (const double tau : {0.5, 5.0, 50.0}) {
    const LorentzTransform big =
        integrate_lorentz(traj, frame, 0.0, tau, 512, Exec::serial, s.m);
    result.residual = std::max(result.residual,
                               von_neumann_entropy(evolve_spin(packet, big.m)));
  }
  result.pass = result.residual <= result.tolerance;
  return result;
}

CheckResult check_rotation_invariance() {
  CheckResult result{"rotation_invariance", 0.0, 1e-12, false,
                     "momentum-independent rotations leave the spin entropy fixed"};
  // A packet with momentum-dependent spin composition, so its reduced state
  // is genuinely mixed.
  GridSpec spec;
  spec.nodes = 65;
  const double q3 = 4.0 / 3.0;
  WavePacket packet = gaussian_packet(q3, 0.15, 1.0, spec);
  for (int i = 0; i < packet.grid.p3.size(); ++i) {
    const double phase = 3.0 * (packet.grid.p3[i] - q3);
    packet.down[i] =
        0.7 * packet.up[i] * std::exp(std::complex<double>(0.0, phase));
  }
  normalize_packet(packet);
  const double base_entropy = von_neumann_entropy(reduced_density(packet));

  std::mt19937_64 rng(777ULL);
  std::uniform_real_distribution<double> rand_u(-1.0, 1.0);
  std::uniform_real_distribution<double> rand_angle(-kPi, kPi);
  for (int k = 0; k < 5; ++k) {
    Vector3d axis(rand_u(rng), rand_u(rng), rand_u(rng));
    if (axis.norm() < 1e-3) {
      axis = Vector3d(0.0, 0.0, 1.0);
    }
    const WignerRotation rot = rotation_about(axis, rand_angle(rng));
    const double entropy = von_neumann_entropy(evolve_spin(packet, rot.m));
    result.residual = std::max(result.residual, std::abs(entropy - base_entropy));
  }
  result.pass = result.residual <= result.tolerance;
  std::ostringstream detail;
  detail << result.detail << "; base S = " << base_entropy;
  result.detail = detail.str();
  return result;
}

CheckResult check_group_closure() {
  CheckResult result{"group_closure", 0.0, 1e-8, false, ""};
  const SchwarzschildScenario s =
      SchwarzschildScenario::from_dimensionless(0.9, 0.8, 0.1);
  const SpacetimeFrame frame = scenario_frame(s);
  const Trajectory traj = scenario_trajectory(s);
  const Vector4d q(s.m * std::cosh(s.xi), 0.0, 0.0, s.m * std::sinh(s.xi));
  const double tau_f = 10.0 * s.tau_s();

  double eta_res = 0.0;
  double drift = 0.0;
  for (const Exec exec : {Exec::serial, Exec::parallel}) {
    const LorentzTransform big =
        integrate_lorentz(traj, frame, 0.0, tau_f, 10000, exec, s.m);
    eta_res = std::max(eta_res, eta_residual(big.m));
    drift = std::max(drift, (big.m * q - q).cwiseAbs().maxCoeff());
  }
  result.residual = std::max(eta_res, drift);
  result.pass = eta_res < 1e-9 && drift < 1e-8;
  std::ostringstream detail;
  detail << "10^4 steps over 10 tau_s, both policies: eta residual = " << eta_res
         << " (< 1e-9), fixed-point drift |Lambda q - q| = " << drift
         << " (< 1e-8)";
  result.detail = detail.str();
  return result;
}

CheckResult check_horizon_adjacent() {
  CheckResult result{"horizon_adjacent", 0.0, 1e-6, false,
                     "r_s/r = 0.9999: angle law (tau_p = 1e-4) and vierbein "
                     "identity at documented looser tolerance"};
  const SchwarzschildScenario s =
      SchwarzschildScenario::from_dimensionless(0.9999, 0.8, 0.1);
  const double keystone = wigner_angle_law_residual_pipeline(s, 1e-4, 33, 4.0, 256);

  const MetricSpec metric = schwarzschild_metric(s.r_s);
  const VierbeinField field = static_vierbein_field(s.r_s);
  const SpacetimePoint x(0.0, s.r, kPi / 2.0 + 0.3, 1.0);
  const double tetrad_res = verify_vierbein(metric, field.at(x), x);

  result.residual = std::max(keystone, tetrad_res);
  result.pass = result.residual <= result.tolerance;
  return result;
}

std::vector<CheckResult> run_validation_suite() {
  return {
      check_vierbein_identity(),     check_static_limit(),
      check_photon_sphere_null(),    check_wigner_angle_law(),
      check_small_width_agreement(), check_entropy_curve_shape(),
      check_rate_curve_shape(),      check_momentum_eigenstate(),
      check_rotation_invariance(),   check_group_closure(),
      check_horizon_adjacent(),
  };
}

} // namespace gravspin
