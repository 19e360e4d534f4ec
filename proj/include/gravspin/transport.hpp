#pragma once

#include "gravspin/exec.hpp"
#include "gravspin/geometry.hpp"

#include <functional>
#include <optional>

// Transport of the local orthonormal frame along a timelike worldline: the
// infinitesimal local Lorentz generator lambda(tau) felt by a comoving
// spin-carrying particle, and its time-ordered integral Lambda(tau_f, tau_i).

namespace gravspin {

// A timelike worldline x(tau) with four-velocity u(tau) = dx/dtau, tau the
// proper time. velocity_dot is optional; when absent du/dtau is obtained by
// central finite differences of velocity.
struct Trajectory {
  std::function<SpacetimePoint(double)> position;
  std::function<Vector4d(double)> velocity;
  std::function<Vector4d(double)> velocity_dot; // may be empty
  double tau_min = -1e300;
  double tau_max = 1e300;
};

// A chart equipped with a metric and an orthonormal frame field.
struct SpacetimeFrame {
  MetricSpec metric;
  VierbeinField field;
};

// Schwarzschild chart + static vierbein field, horizon radius r_s (>= 0).
SpacetimeFrame schwarzschild_frame(double r_s);

// Cartesian Minkowski chart + identity frame.
SpacetimeFrame minkowski_frame();

// Circular equatorial orbit of radius r in a Schwarzschild chart of horizon
// r_s (r > r_s), with rapidity xi relative to the local static observer:
// the local 3-velocity is tanh(xi) in the +phi frame direction.
//   u^t = cosh(xi)/sqrt(f),  u^phi = sinh(xi)/r,  theta = pi/2,  f = 1 - r_s/r.
// r_s = 0 gives a Minkowski circular orbit on the spherical chart.
Trajectory circular_trajectory_schwarzschild(double r, double r_s, double xi);

// A proper orthochronous Lorentz matrix acting on frame indices, m^a_b.
struct LorentzTransform {
  Matrix4d m = Matrix4d::Identity();
};

// max |Lambda^T eta Lambda - eta|: distance from the Lorentz group.
double eta_residual(const Matrix4d& m);

// max |(eta lambda)^T - (-eta lambda)|: distance from the Lorentz algebra
// (lambda^ab must be antisymmetric once the first index is lowered).
double lorentz_algebra_residual(const Matrix4d& lambda);

// Project m back onto the Lorentz group (Newton polar iteration
// X <- (X + eta X^{-T} eta)/2); used to absorb accumulated drift.
void reorthonormalize(Matrix4d& m);

// Four-acceleration a^mu = du^mu/dtau + Gamma^mu_{nu rho} u^nu u^rho at
// proper time tau, returned in frame components a^a = e^a_mu a^mu.
Vector4d four_acceleration(const Trajectory& traj, const SpacetimeFrame& frame,
                           double tau);

// Frame-change rate chi^a_b = u^mu e_b^nu (d_mu e^a_nu - Gamma^rho_{mu nu} e^a_rho):
// the rotation/boost rate of the frame field as seen along the worldline.
Matrix4d frame_change_chi(const Trajectory& traj, const SpacetimeFrame& frame,
                          double tau);

// The boost part of the generator produced by proper acceleration a (frame
// components) acting on momentum q = m u (frame components):
//   -(1/m) (a^a q_b - q^a a_b)   [c = 1].
Matrix4d acceleration_boost_generator(const Vector4d& a_local,
                                      const Vector4d& q_local, double mass);

// Full infinitesimal local Lorentz generator lambda^a_b(tau): acceleration
// boost plus frame-change rate. Mass cancels for a prescribed trajectory but
// is kept as a parameter for dimensional clarity.
Matrix4d infinitesimal_lt(const Trajectory& traj, const SpacetimeFrame& frame,
                          double tau, double mass = 1.0);

// Time-ordered integral Lambda(tau_f, tau_i) = T exp( int lambda dtau ),
// computed as the ordered product of per-step exact matrix exponentials with
// midpoint sampling; later steps multiply on the left. The parallel policy
// composes a fixed 64-window partition so the result is independent of the
// OpenMP thread count. If the accumulated eta-residual exceeds 1e-9 the
// result is re-orthonormalized once at the end.
LorentzTransform integrate_lorentz(const Trajectory& traj,
                                   const SpacetimeFrame& frame, double tau_i,
                                   double tau_f, int steps = 4096,
                                   Exec exec = Exec::serial, double mass = 1.0);

// Same ordered-product integrator for a constant generator (used for
// closed-form scenarios and fault-injection hooks in the validation suite).
LorentzTransform integrate_constant_generator(const Matrix4d& lambda,
                                              double tau, int steps = 256);

} // namespace gravspin
