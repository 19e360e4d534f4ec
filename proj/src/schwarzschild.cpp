#include "gravspin/schwarzschild.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <vector>

namespace gravspin {

namespace {

double omega_from_l(double l, double tanh_xi, double mass, double p3) {
  const double p0 = std::hypot(p3, mass);
  return (1.0 - p3 * tanh_xi / (p0 + mass)) * l;
}

} // namespace

SchwarzschildScenario SchwarzschildScenario::from_dimensionless(double rs_over_r,
                                                                double v_over_c,
                                                                double w_over_mc) {
  if (!(rs_over_r > 0.0 && rs_over_r < 1.0)) {
    throw std::invalid_argument(
        "from_dimensionless: r_s/r must lie in (0, 1) exclusive");
  }
  if (!(v_over_c >= 0.0 && v_over_c < 1.0)) {
    throw std::invalid_argument("from_dimensionless: v/c must lie in [0, 1)");
  }
  if (!(w_over_mc >= 0.0) || !std::isfinite(w_over_mc)) {
    throw std::invalid_argument("from_dimensionless: w/mc must be finite and >= 0");
  }
  SchwarzschildScenario s;
  s.r_s = 1.0;
  s.r = 1.0 / rs_over_r;
  s.xi = std::atanh(v_over_c);
  s.w = w_over_mc;
  s.m = 1.0;
  return s;
}

double SchwarzschildScenario::tau_s() const {
  if (w == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return m * r_s / w;
}

void SchwarzschildScenario::validate() const {
  if (!(r_s >= 0.0) || !std::isfinite(r_s)) {
    throw std::invalid_argument("scenario: r_s must be finite and >= 0");
  }
  if (!(r > r_s) || !std::isfinite(r)) {
    std::ostringstream msg;
    msg << "scenario: orbit radius r = " << r
        << " must lie outside the horizon r_s = " << r_s;
    throw ChartError(msg.str());
  }
  if (!(xi >= 0.0) || !std::isfinite(xi)) {
    throw std::invalid_argument("scenario: rapidity xi must be finite and >= 0");
  }
  if (!(w >= 0.0) || !std::isfinite(w)) {
    throw std::invalid_argument("scenario: width w must be finite and >= 0");
  }
  if (!(m > 0.0) || !std::isfinite(m)) {
    throw std::invalid_argument("scenario: mass m must be finite and > 0");
  }
}

double l_factor(const SchwarzschildScenario& s) {
  s.validate();
  const double ch = std::cosh(s.xi);
  const double sh = std::sinh(s.xi);
  const double f = s.f();
  return (ch * ch * sh / s.r) * (1.0 - s.r_s / (2.0 * s.r * f)) * std::sqrt(f);
}

double omega(const SchwarzschildScenario& s, double p3) {
  return omega_from_l(l_factor(s), std::tanh(s.xi), s.m, p3);
}

Matrix4d lambda_generator(const SchwarzschildScenario& s) {
  const double l = l_factor(s);
  const double th = std::tanh(s.xi);
  Matrix4d lambda = Matrix4d::Zero();
  lambda(0, 1) = lambda(1, 0) = -l * th;
  lambda(1, 3) = l;
  lambda(3, 1) = -l;
  return lambda;
}

SpacetimeFrame scenario_frame(const SchwarzschildScenario& s) {
  s.validate();
  return schwarzschild_frame(s.r_s);
}

Trajectory scenario_trajectory(const SchwarzschildScenario& s) {
  s.validate();
  return circular_trajectory_schwarzschild(s.r, s.r_s, s.xi);
}

DecoherenceCoefficients small_w_coefficients(const SchwarzschildScenario& s) {
  const double l = l_factor(s);
  const double ch = std::cosh(s.xi);
  const double th = std::tanh(s.xi);
  DecoherenceCoefficients c;
  c.A = (l * s.w * s.w * th * th / (2.0 * s.m * s.m)) *
        (1.0 / ((ch + 1.0) * (ch + 1.0)) - 1.0 / (ch * ch));
  c.B = (l * s.w * th / s.m) * (1.0 / ch - 1.0 / (ch + 1.0));
  c.tau_s = s.tau_s();
  return c;
}

double phase_average_approx(const DecoherenceCoefficients& c, double tau) {
  if (!std::isfinite(tau)) {
    throw std::invalid_argument("phase_average_approx: tau must be finite");
  }
  const double a2t2 = c.A * c.A * tau * tau;
  return std::pow(1.0 + a2t2, -0.25) *
         std::exp(-c.B * c.B * tau * tau / (4.0 * (1.0 + a2t2)));
}

double exact_phase_average(const SchwarzschildScenario& s, double tau,
                           const GridSpec& spec) {
  const double l = l_factor(s);
  const double th = std::tanh(s.xi);
  const WavePacket packet = gaussian_packet(s.q3(), s.w, s.m, spec);
  std::complex<double> avg = 0.0;
  for (int i = 0; i < packet.grid.p3.size(); ++i) {
    const double density = packet.grid.weight[i] * std::norm(packet.up[i]);
    const double om = omega_from_l(l, th, s.m, packet.grid.p3[i]);
    avg += density * std::exp(std::complex<double>(0.0, om * tau));
  }
  return std::abs(avg);
}

std::vector<double> entropy_curve(const SchwarzschildScenario& s,
                                  const std::vector<double>& taus,
                                  EntropyMode mode, const GridSpec& spec,
                                  Exec exec) {
  const int n = static_cast<int>(taus.size());
  std::vector<double> out(n, 0.0);

  if (mode == EntropyMode::approx) {
    const DecoherenceCoefficients coeffs = small_w_coefficients(s);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
#endif
    for (int i = 0; i < n; ++i) {
      const double avg = phase_average_approx(coeffs, taus[i]);
      out[i] = binary_entropy(0.5 * (1.0 - avg));
    }
    return out;
  }

  // Exact mode: precompute the per-node density and rotation rate once, then
  // each tau is an independent phase sum over the same grid.
  const double l = l_factor(s);
  const double th = std::tanh(s.xi);
  const WavePacket packet = gaussian_packet(s.q3(), s.w, s.m, spec);
  const int nodes = static_cast<int>(packet.grid.p3.size());
  std::vector<double> density(nodes), rate(nodes);
  for (int i = 0; i < nodes; ++i) {
    density[i] = packet.grid.weight[i] * std::norm(packet.up[i]);
    rate[i] = omega_from_l(l, th, s.m, packet.grid.p3[i]);
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
#endif
  for (int i = 0; i < n; ++i) {
    std::complex<double> avg = 0.0;
    for (int k = 0; k < nodes; ++k) {
      avg += density[k] * std::exp(std::complex<double>(0.0, rate[k] * taus[i]));
    }
    out[i] = binary_entropy(0.5 * (1.0 - std::abs(avg)));
  }
  return out;
}

std::vector<double> decoherence_rate_curve(const std::vector<double>& xs,
                                           double v_over_c, double w_over_mc,
                                           Exec exec) {
  if (!(w_over_mc > 0.0)) {
    throw std::invalid_argument(
        "decoherence_rate_curve: w/mc must be positive (tau_s must be finite)");
  }
  for (const double x : xs) {
    if (!(x > 0.0 && x < 1.0)) {
      std::ostringstream msg;
      msg << "decoherence_rate_curve: r_s/r = " << x
          << " outside the open interval (0, 1)";
      throw std::invalid_argument(msg.str());
    }
  }
  const int n = static_cast<int>(xs.size());
  std::vector<double> out(n, 0.0);
  std::exception_ptr failure;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
#endif
  for (int i = 0; i < n; ++i) {
    try {
      const SchwarzschildScenario s =
          SchwarzschildScenario::from_dimensionless(xs[i], v_over_c, w_over_mc);
      const DecoherenceCoefficients c = small_w_coefficients(s);
      out[i] = std::abs(c.B) * c.tau_s;
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!failure) {
        failure = std::current_exception();
      }
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  return out;
}

} // namespace gravspin
