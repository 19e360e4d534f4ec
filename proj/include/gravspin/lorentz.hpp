#pragma once

#include "gravspin/geometry.hpp"

#include <Eigen/Dense>

#include <complex>

// Finite Lorentz transformations on frame indices: standard boosts, Wigner
// rotations, rotation decomposition, and the spin-1/2 representation.

namespace gravspin {

using Matrix2cd = Eigen::Matrix2cd;
using Vector2cd = Eigen::Vector2cd;
using Vector3d = Eigen::Vector3d;

// On-shell four-momentum in frame components, p^0 = sqrt(|p|^2 + m^2) > 0.
// Constructed from the spatial part so the shell condition holds exactly.
struct LocalMomentum {
  Vector4d p;
  double mass = 1.0;

  static LocalMomentum from_spatial(const Vector3d& p_spatial, double mass);
  // Momentum along the frame 3-axis (the configuration used throughout the
  // circular-orbit scenario).
  static LocalMomentum from_p3(double p3, double mass);
};

// Standard boost L(p): the pure boost taking the rest-frame momentum
// (m, 0, 0, 0) to p. Symmetric; inverse is eta L eta.
//   L^0_0 = p^0/m, L^0_i = L^i_0 = p^i/m,
//   L^i_k = delta_ik + (p^0/m - 1) p^i p^k / |p|^2,
// with the spatial block defaulting to the identity when |p|/m < 1e-12.
Matrix4d standard_boost(const LocalMomentum& p);

// Wigner rotation W(Lambda, p) = L(Lambda p)^{-1} Lambda L(p). For a proper
// orthochronous Lambda this is a spatial rotation (block-diagonal with
// W^0_0 = 1) up to Lambda's own eta-residual. The inverse boost is built
// from the transformed momentum's spatial part with the energy recomputed
// on-shell, so it is exactly a group element.
struct WignerRotation {
  Matrix4d m;
};

WignerRotation wigner_rotation(const Matrix4d& lambda, const LocalMomentum& p);

// max deviation of W from a spatial rotation: |W^0_0 - 1|, time-space
// entries, |R^T R - I|, |det R - 1|.
double wigner_residual(const WignerRotation& w);

// Axis-angle decomposition of the spatial block of a rotation, with a
// deterministic sign convention: the axis's first component of magnitude
// > 1e-12 is made positive (the angle's sign flips accordingly), and the
// angle lies in (-pi, pi]. Identity maps to angle 0, axis (1, 0, 0).
struct AxisAngle {
  Vector3d axis;
  double angle = 0.0;
};

AxisAngle rotation_angle_axis(const WignerRotation& w);

// Rotation by `angle` about `axis` (normalized internally), embedded as a
// 4x4 frame transformation.
WignerRotation rotation_about(const Vector3d& axis, double angle);

// Spin-1/2 representation of a Wigner rotation:
//   D(W) = cos(theta/2) I - i sin(theta/2) (n . sigma),
// unitary, det = 1, defined up to the global sign fixed by the axis-angle
// convention above.
Matrix2cd spin_half_rep(const WignerRotation& w);

} // namespace gravspin
