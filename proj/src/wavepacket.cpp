#include "gravspin/wavepacket.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>
#include <vector>

namespace gravspin {

namespace {

constexpr double kSqrtPi = 1.77245385090551602730;

void require_packet_inputs(double w, double mass, const GridSpec& spec) {
  if (!(w >= 0.0) || !std::isfinite(w)) {
    throw std::invalid_argument("gaussian_packet: width must be finite and >= 0");
  }
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw std::invalid_argument("gaussian_packet: mass must be finite and > 0");
  }
  if (spec.nodes < 1) {
    throw std::invalid_argument("gaussian_packet: grid needs at least one node");
  }
  if (!(spec.span_sigmas > 0.0)) {
    throw std::invalid_argument("gaussian_packet: span must be positive");
  }
}

double shell_energy(double p3, double mass) { return std::hypot(p3, mass); }

} // namespace

void gauss_hermite_nodes(int n, VectorXd& nodes, VectorXd& weights) {
  if (n < 1 || n > 301) {
    throw std::invalid_argument(
        "gauss_hermite_nodes: order must be in [1, 301] (raw weights underflow "
        "beyond; use a trapezoid grid for wider integrands)");
  }
  if (n == 1) {
    nodes = VectorXd::Zero(1);
    weights = VectorXd::Constant(1, kSqrtPi);
    return;
  }
  // Golub-Welsch on the Jacobi matrix of the (physicists') Hermite recurrence:
  // zero diagonal, off-diagonal sqrt(k/2).
  VectorXd diag = VectorXd::Zero(n);
  VectorXd subdiag(n - 1);
  for (int k = 1; k < n; ++k) {
    subdiag[k - 1] = std::sqrt(k / 2.0);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, subdiag, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("gauss_hermite_nodes: eigensolver failed");
  }
  nodes = solver.eigenvalues();
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double v0 = solver.eigenvectors()(0, i);
    // Plain-measure weight: Gauss-Hermite weight times exp(+x^2).
    weights[i] = kSqrtPi * v0 * v0 * std::exp(nodes[i] * nodes[i]);
  }
}

WavePacket gaussian_packet(double centre, double w, double mass,
                           const GridSpec& spec) {
  require_packet_inputs(w, mass, spec);
  WavePacket packet;
  packet.mass = mass;
  packet.width = w;

  if (w == 0.0) {
    // Momentum eigenstate: a single node carrying the whole norm.
    const double n_factor = mass / shell_energy(centre, mass);
    packet.grid.p3 = VectorXd::Constant(1, centre);
    packet.grid.weight = VectorXd::Constant(1, n_factor);
    packet.up = VectorXcd::Constant(1, 1.0 / std::sqrt(n_factor));
    packet.down = VectorXcd::Zero(1);
    return packet;
  }

  VectorXd x;      // dimensionless offsets (p - centre)/w
  VectorXd plain;  // plain-measure quadrature weights in x
  if (spec.kind == GridKind::gauss_hermite) {
    gauss_hermite_nodes(spec.nodes, x, plain);
  } else {
    if (spec.nodes < 2) {
      throw std::invalid_argument(
          "gaussian_packet: trapezoid grid needs at least two nodes");
    }
    const int n = spec.nodes;
    const double span = spec.span_sigmas;
    const double h = 2.0 * span / (n - 1);
    x.resize(n);
    plain.resize(n);
    for (int i = 0; i < n; ++i) {
      x[i] = -span + i * h;
      plain[i] = (i == 0 || i == n - 1) ? h / 2.0 : h;
    }
  }

  const int n = static_cast<int>(x.size());
  packet.grid.p3.resize(n);
  packet.grid.weight.resize(n);
  packet.up.resize(n);
  packet.down = VectorXcd::Zero(n);
  for (int i = 0; i < n; ++i) {
    const double p3 = centre + w * x[i];
    const double n_factor = mass / shell_energy(p3, mass);
    packet.grid.p3[i] = p3;
    packet.grid.weight[i] = plain[i] * w * n_factor;
    packet.up[i] = std::exp(-0.5 * x[i] * x[i]) / std::sqrt(kSqrtPi * w * n_factor);
  }

  const double norm = packet_norm(packet);
  if (std::abs(1.0 - norm) > 1e-6) {
    std::ostringstream msg;
    msg << "gaussian_packet: grid captures only " << norm
        << " of the packet norm (deficit " << std::abs(1.0 - norm)
        << " > 1e-6); widen the grid";
    throw CoverageError(msg.str());
  }
  const double scale = 1.0 / std::sqrt(norm);
  packet.up *= scale;
  return packet;
}

double packet_norm(const WavePacket& packet) {
  double norm = 0.0;
  for (int i = 0; i < packet.grid.p3.size(); ++i) {
    norm += packet.grid.weight[i] *
            (std::norm(packet.up[i]) + std::norm(packet.down[i]));
  }
  return norm;
}

void normalize_packet(WavePacket& packet) {
  const double norm = packet_norm(packet);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::runtime_error("normalize_packet: packet has no norm");
  }
  const double scale = 1.0 / std::sqrt(norm);
  packet.up *= scale;
  packet.down *= scale;
}

std::complex<double> momentum_average(
    const WavePacket& packet,
    const std::function<std::complex<double>(double)>& f) {
  std::complex<double> sum = 0.0;
  for (int i = 0; i < packet.grid.p3.size(); ++i) {
    const double density =
        packet.grid.weight[i] * (std::norm(packet.up[i]) + std::norm(packet.down[i]));
    sum += density * f(packet.grid.p3[i]);
  }
  return sum;
}

SpinDensityMatrix reduced_density(const WavePacket& packet) {
  Matrix2cd rho = Matrix2cd::Zero();
  for (int i = 0; i < packet.grid.p3.size(); ++i) {
    Vector2cd s(packet.up[i], packet.down[i]);
    rho += packet.grid.weight[i] * (s * s.adjoint());
  }
  SpinDensityMatrix result;
  result.rho = 0.5 * (rho + rho.adjoint());
  return result;
}

SpinDensityMatrix evolve_spin(const WavePacket& packet, const Matrix4d& lambda_big,
                              Exec exec) {
  const int n = static_cast<int>(packet.grid.p3.size());
  if (std::abs(packet_norm(packet) - 1.0) > 1e-9) {
    throw std::invalid_argument("evolve_spin: packet is not normalized");
  }
  // Phase 1: rotate each node's spinor (independent work). Phase 2: reduce in
  // index order. Both policies share the structure, so they agree bitwise.
  std::vector<Vector2cd> rotated(n);
  std::exception_ptr failure;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
#endif
  for (int i = 0; i < n; ++i) {
    try {
      const LocalMomentum p = LocalMomentum::from_p3(packet.grid.p3[i], packet.mass);
      const Matrix2cd d = spin_half_rep(wigner_rotation(lambda_big, p));
      rotated[i] = d * Vector2cd(packet.up[i], packet.down[i]);
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

  Matrix2cd rho = Matrix2cd::Zero();
  for (int i = 0; i < n; ++i) {
    rho += packet.grid.weight[i] * (rotated[i] * rotated[i].adjoint());
  }
  SpinDensityMatrix result;
  result.rho = 0.5 * (rho + rho.adjoint());
  return result;
}

double von_neumann_entropy(const SpinDensityMatrix& rho) {
  const double herm = (rho.rho - rho.rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-9) {
    throw std::runtime_error("von_neumann_entropy: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix2cd> solver(rho.rho);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("von_neumann_entropy: eigensolver failed");
  }
  double entropy = 0.0;
  for (int i = 0; i < 2; ++i) {
    double lam = solver.eigenvalues()[i];
    if (lam < -1e-9) {
      std::ostringstream msg;
      msg << "von_neumann_entropy: eigenvalue " << lam
          << " is negative beyond tolerance";
      throw PositivityError(msg.str());
    }
    lam = std::min(std::max(lam, 0.0), 1.0);
    if (lam > 0.0) {
      entropy -= lam * std::log2(lam);
    }
  }
  return std::min(std::max(entropy, 0.0), 1.0);
}

double binary_entropy(double P) {
  if (!std::isfinite(P)) {
    throw std::invalid_argument("binary_entropy: probability must be finite");
  }
  const double p = std::min(std::max(P, 0.0), 1.0);
  double entropy = 0.0;
  if (p > 0.0) {
    entropy -= p * std::log2(p);
  }
  if (p < 1.0) {
    entropy -= (1.0 - p) * std::log2(1.0 - p);
  }
  return std::min(std::max(entropy, 0.0), 1.0);
}

} // namespace gravspin
