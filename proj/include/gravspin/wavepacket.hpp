#pragma once

#include "gravspin/exec.hpp"
#include "gravspin/lorentz.hpp"

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <stdexcept>

// Momentum-space wave packets with spin, their reduced spin density matrices,
// and entropy. Packets live on the frame 3-axis mass shell: nodes are values
// of p^3 with p^0 = sqrt((p^3)^2 + m^2), in units with c = 1.

namespace gravspin {

using VectorXd = Eigen::VectorXd;
using VectorXcd = Eigen::VectorXcd;

// Thrown when a quadrature grid fails to capture the packet (normalization
// deficit beyond tolerance).
struct CoverageError : std::runtime_error {
  explicit CoverageError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a density matrix has an eigenvalue below -1e-9.
struct PositivityError : std::runtime_error {
  explicit PositivityError(const std::string& what) : std::runtime_error(what) {}
};

enum class GridKind { gauss_hermite, trapezoid };

// Quadrature recipe for momentum-space integrals. `nodes` must be >= 1 (odd
// recommended so a node lands on the packet centre); span_sigmas is the
// half-width of the covered interval in units of the packet width (used by
// the trapezoid rule; Gauss-Hermite sets its own span).
struct GridSpec {
  GridKind kind = GridKind::gauss_hermite;
  int nodes = 129;
  double span_sigmas = 8.0;
};

// Gauss-Hermite rule for weight exp(-x^2) via Golub-Welsch. Returns nodes
// ascending and *plain-measure* weights w_i * exp(x_i^2), i.e. weights for
// integrating f directly rather than f * exp(-x^2). n must be in [1, 301]
// (beyond that the raw weights underflow).
void gauss_hermite_nodes(int n, VectorXd& nodes, VectorXd& weights);

// Quadrature nodes on the p^3 axis. `weight` is the full measure factor per
// node: quadrature weight (plain measure, packet units) times the invariant
// normalization N(p) = m / p^0.
struct MomentumGrid {
  VectorXd p3;
  VectorXd weight;
};

// A spinor-valued momentum wave packet: amplitudes for spin up/down at each
// grid node. Normalized so sum_i weight_i (|up_i|^2 + |down_i|^2) = 1.
struct WavePacket {
  MomentumGrid grid;
  VectorXcd up;
  VectorXcd down;
  double mass = 1.0;
  double width = 0.0; // packet width w (momentum units); 0 = single node
};

// Gaussian packet centred at p^3 = centre with width w >= 0, pure spin-up:
//   C(p) ~ exp(-(p - centre)^2 / (2 w^2)) / sqrt(N(p)),
// discretized on `spec` and renormalized. w = 0 degenerates to one node at
// the centre (a momentum eigenstate). Throws CoverageError if the grid
// captures less than 1 - 1e-6 of the norm before renormalization.
WavePacket gaussian_packet(double centre, double w, double mass,
                           const GridSpec& spec = {});

// Sum_i weight_i (|up_i|^2 + |down_i|^2).
double packet_norm(const WavePacket& packet);

// Scale amplitudes so packet_norm == 1. Throws std::runtime_error on zero norm.
void normalize_packet(WavePacket& packet);

// Momentum-space average of f(p^3) under the packet's total per-node density.
std::complex<double> momentum_average(
    const WavePacket& packet,
    const std::function<std::complex<double>(double)>& f);

// 2x2 reduced spin density matrix. Hermitian, unit trace, positive
// semidefinite up to roundoff.
struct SpinDensityMatrix {
  Matrix2cd rho = Matrix2cd::Zero();
};

// rho = sum_i weight_i s_i s_i^dagger with s_i = (up_i, down_i).
SpinDensityMatrix reduced_density(const WavePacket& packet);

// Reduced spin density matrix after acting with the frame transformation
// Lambda: each node's spinor is rotated by D(W(Lambda, p_i)) and the
// momentum is traced out. Node contributions are accumulated in index order
// under both execution policies, so serial and parallel agree bitwise.
SpinDensityMatrix evolve_spin(const WavePacket& packet, const Matrix4d& lambda_big,
                              Exec exec = Exec::serial);

// Von Neumann entropy in bits, in [0, 1] for a 2x2 state. Eigenvalues in
// [-1e-12, 0) are clipped to 0; an eigenvalue below -1e-9 throws
// PositivityError.
double von_neumann_entropy(const SpinDensityMatrix& rho);

// Binary entropy -P log2 P - (1-P) log2(1-P), with 0 log 0 = 0.
double binary_entropy(double P);

} // namespace gravspin
