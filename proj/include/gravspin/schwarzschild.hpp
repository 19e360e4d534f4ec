#pragma once

#include "gravspin/exec.hpp"
#include "gravspin/transport.hpp"
#include "gravspin/wavepacket.hpp"

#include <complex>
#include <vector>

// Closed forms for the circular-orbit spin-decoherence scenario: a Gaussian
// wave packet carried on a circular equatorial Schwarzschild orbit, its
// momentum-dependent Wigner phase, and the resulting entropy growth.

namespace gravspin {

// Scenario parameters, internally in units G = c = 1 (lengths in units of
// r_s once from_dimensionless is used). xi is the orbital rapidity relative
// to the local static observer (local speed v = tanh xi), w the packet
// width in momentum units, m the particle mass.
struct SchwarzschildScenario {
  double r_s = 1.0;
  double r = 1.0 / 0.9;
  double xi = 0.0;
  double w = 0.1;
  double m = 1.0;

  // Build from the dimensionless knobs (r_s/r, v/c, w/mc) with r_s = m = 1.
  static SchwarzschildScenario from_dimensionless(double rs_over_r,
                                                  double v_over_c,
                                                  double w_over_mc);

  double f() const { return 1.0 - r_s / r; }
  // Decoherence time unit tau_s = m r_s / w (infinite for w = 0).
  double tau_s() const;
  // Packet centre momentum q^3 = m sinh xi.
  double q3() const { return m * std::sinh(xi); }

  // Throws std::invalid_argument / ChartError when outside the domain
  // r > r_s >= 0, xi >= 0 finite, w >= 0, m > 0.
  void validate() const;
};

// Orbital generator scale
//   L = (cosh^2 xi sinh xi / r) (1 - r_s / (2 r f)) sqrt(f),
// the common factor of the boost and rotation parts of lambda. Vanishes at
// xi = 0 and at r = 3 r_s / 2 (by cancellation).
double l_factor(const SchwarzschildScenario& s);

// Momentum-dependent Wigner rotation rate about the frame 2-axis:
//   Omega(p^3) = (1 - p^3 tanh xi / (p^0 + m)) L,  p^0 = sqrt((p^3)^2 + m^2).
double omega(const SchwarzschildScenario& s, double p3);

// The constant local Lorentz generator of the circular orbit in frame
// components: lambda = -L tanh(xi) K_1 + L J_2, i.e.
//   lambda^0_1 = lambda^1_0 = -L tanh xi,  lambda^1_3 = L,  lambda^3_1 = -L.
Matrix4d lambda_generator(const SchwarzschildScenario& s);

// Chart + static frame field and the orbit worldline for this scenario.
SpacetimeFrame scenario_frame(const SchwarzschildScenario& s);
Trajectory scenario_trajectory(const SchwarzschildScenario& s);

// Small-width expansion coefficients of the phase average:
//   A = (L w^2 tanh^2 xi / 2 m^2) [ 1/(cosh xi + 1)^2 - 1/cosh^2 xi ],
//   B = (L w tanh xi / m) [ 1/cosh xi - 1/(cosh xi + 1) ],
// plus the decoherence time tau_s = m r_s / w.
struct DecoherenceCoefficients {
  double A = 0.0;
  double B = 0.0;
  double tau_s = 0.0;
};

DecoherenceCoefficients small_w_coefficients(const SchwarzschildScenario& s);

// |average of e^{i Omega tau}| in the second-order small-w expansion:
//   (1 + A^2 tau^2)^{-1/4} exp( -B^2 tau^2 / (4 (1 + A^2 tau^2)) ).
double phase_average_approx(const DecoherenceCoefficients& c, double tau);

// |average of e^{i Omega(p^3) tau}| by quadrature over the Gaussian packet.
double exact_phase_average(const SchwarzschildScenario& s, double tau,
                           const GridSpec& spec = {});

enum class EntropyMode { approx, exact };

// Spin entropy S'(tau) = h2((1 - |avg|)/2) for each tau (absolute units,
// same clock as tau_s). Points are independent; the parallel policy fills
// per-point slots.
std::vector<double> entropy_curve(const SchwarzschildScenario& s,
                                  const std::vector<double>& taus,
                                  EntropyMode mode, const GridSpec& spec = {},
                                  Exec exec = Exec::serial);

// |B| tau_s as a function of r_s/r at fixed v/c and w/mc: the dimensionless
// decoherence rate per orbit-time unit. Each x in xs must lie in (0, 1).
std::vector<double> decoherence_rate_curve(const std::vector<double>& xs,
                                           double v_over_c, double w_over_mc,
                                           Exec exec = Exec::serial);

} // namespace gravspin
