#include "gravspin/transport.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <sstream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gravspin {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kCompositionWindows = 64; // fixed partition => thread-count independent

Matrix4d step_exponential(const Matrix4d& lambda, double dtau, double tau_mid) {
  if (!lambda.allFinite()) {
    std::ostringstream msg;
    msg << "integrate_lorentz: non-finite generator at tau = " << tau_mid;
    throw std::runtime_error(msg.str());
  }
  return Matrix4d((lambda * dtau).exp());
}

} // namespace

SpacetimeFrame schwarzschild_frame(double r_s) {
  return SpacetimeFrame{schwarzschild_metric(r_s), static_vierbein_field(r_s)};
}

SpacetimeFrame minkowski_frame() {
  return SpacetimeFrame{minkowski_metric(), identity_vierbein_field()};
}

Trajectory circular_trajectory_schwarzschild(double r, double r_s, double xi) {
  if (!(r_s >= 0.0) || !(r > r_s) || !std::isfinite(r) || !std::isfinite(xi)) {
    throw std::invalid_argument(
        "circular_trajectory_schwarzschild: need finite xi and r > r_s >= 0");
  }
  const double f = 1.0 - r_s / r;
  const double u_t = std::cosh(xi) / std::sqrt(f);
  const double u_phi = std::sinh(xi) / r;
  Trajectory traj;
  traj.position = [r, u_t, u_phi](double tau) {
    return SpacetimePoint(u_t * tau, r, kPi / 2.0, u_phi * tau);
  };
  traj.velocity = [u_t, u_phi](double) {
    return Vector4d(u_t, 0.0, 0.0, u_phi);
  };
  traj.velocity_dot = [](double) { return Vector4d::Zero().eval(); };
  return traj;
}

double eta_residual(const Matrix4d& m) {
  const Matrix4d eta = minkowski_eta();
  return (m.transpose() * eta * m - eta).cwiseAbs().maxCoeff();
}

double lorentz_algebra_residual(const Matrix4d& lambda) {
  const Matrix4d lowered = minkowski_eta() * lambda;
  return (lowered + lowered.transpose()).cwiseAbs().maxCoeff();
}

void reorthonormalize(Matrix4d& m) {
  const Matrix4d eta = minkowski_eta();
  for (int iter = 0; iter < 8 && eta_residual(m) > 1e-13; ++iter) {
    m = 0.5 * (m + eta * m.inverse().transpose() * eta);
  }
}

Vector4d four_acceleration(const Trajectory& traj, const SpacetimeFrame& frame,
                           double tau) {
  const SpacetimePoint x = traj.position(tau);
  const Vector4d u = traj.velocity(tau);
  Vector4d udot;
  if (traj.velocity_dot) {
    udot = traj.velocity_dot(tau);
  } else {
    const double h = 1e-6 * std::max(1.0, std::abs(tau));
    udot = (traj.velocity(tau + h) - traj.velocity(tau - h)) / (2.0 * h);
  }
  const ChristoffelSymbols gamma = christoffel(frame.metric, x);
  Vector4d a_coords = udot;
  for (int mu = 0; mu < 4; ++mu) {
    a_coords[mu] += u.dot(gamma[mu] * u);
  }
  return frame.field.at(x).coframe * a_coords;
}

Matrix4d frame_change_chi(const Trajectory& traj, const SpacetimeFrame& frame,
                          double tau) {
  const SpacetimePoint x = traj.position(tau);
  const Vector4d u = traj.velocity(tau);
  const Vierbein tetrad = frame.field.at(x);
  const std::array<Matrix4d, 4> partials =
      coframe_partials(frame.field, x, frame.metric.fd_scale);
  const ChristoffelSymbols gamma = christoffel(frame.metric, x);

  // directional(a, nu) = u^mu d_mu e^a_nu
  Matrix4d directional = Matrix4d::Zero();
  for (int mu = 0; mu < 4; ++mu) {
    directional += u[mu] * partials[mu];
  }
  // contracted(rho, nu) = u^mu Gamma^rho_{mu nu}
  Matrix4d contracted;
  for (int rho = 0; rho < 4; ++rho) {
    contracted.row(rho) = u.transpose() * gamma[rho];
  }
  return (directional - tetrad.coframe * contracted) * tetrad.frame.transpose();
}

Matrix4d acceleration_boost_generator(const Vector4d& a_local,
                                      const Vector4d& q_local, double mass) {
  if (!(mass > 0.0)) {
    throw std::invalid_argument("acceleration_boost_generator: mass must be > 0");
  }
  const Matrix4d eta = minkowski_eta();
  const Vector4d a_lower = eta * a_local;
  const Vector4d q_lower = eta * q_local;
  return -(a_local * q_lower.transpose() - q_local * a_lower.transpose()) / mass;
}

Matrix4d infinitesimal_lt(const Trajectory& traj, const SpacetimeFrame& frame,
                          double tau, double mass) {
  const SpacetimePoint x = traj.position(tau);
  const Vector4d u_local = frame.field.at(x).coframe * traj.velocity(tau);
  const Vector4d a_local = four_acceleration(traj, frame, tau);
  const Vector4d q_local = mass * u_local;
  return acceleration_boost_generator(a_local, q_local, mass) +
         frame_change_chi(traj, frame, tau);
}

LorentzTransform integrate_lorentz(const Trajectory& traj,
                                   const SpacetimeFrame& frame, double tau_i,
                                   double tau_f, int steps, Exec exec,
                                   double mass) {
  if (steps < 1) {
    throw std::invalid_argument("integrate_lorentz: steps must be >= 1");
  }
  const double lo = std::min(tau_i, tau_f);
  const double hi = std::max(tau_i, tau_f);
  if (lo < traj.tau_min || hi > traj.tau_max) {
    throw std::invalid_argument(
        "integrate_lorentz: requested interval is outside the trajectory domain");
  }
  LorentzTransform result;
  if (tau_i == tau_f) {
    return result;
  }
  const double dtau = (tau_f - tau_i) / steps;

  const auto window_product = [&](int k_begin, int k_end) {
    Matrix4d acc = Matrix4d::Identity();
    for (int k = k_begin; k < k_end; ++k) {
      const double tau_mid = tau_i + (k + 0.5) * dtau;
      acc = step_exponential(infinitesimal_lt(traj, frame, tau_mid, mass), dtau,
                             tau_mid) *
            acc;
    }
    return acc;
  };

  if (exec == Exec::serial) {
    result.m = window_product(0, steps);
  } else {
    const int windows = std::min(kCompositionWindows, steps);
    std::vector<Matrix4d> partial(windows, Matrix4d::Identity());
    std::exception_ptr failure;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int w = 0; w < windows; ++w) {
      try {
        const int k_begin = static_cast<int>(
            (static_cast<long long>(steps) * w) / windows);
        const int k_end = static_cast<int>(
            (static_cast<long long>(steps) * (w + 1)) / windows);
        partial[w] = window_product(k_begin, k_end);
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
    for (int w = 0; w < windows; ++w) {
      result.m = partial[w] * result.m;
    }
  }

  if (eta_residual(result.m) > 1e-9) {
    reorthonormalize(result.m);
  }
  return result;
}

LorentzTransform integrate_constant_generator(const Matrix4d& lambda,
                                              double tau, int steps) {
  if (steps < 1) {
    throw std::invalid_argument(
        "integrate_constant_generator: steps must be >= 1");
  }
  LorentzTransform result;
  if (tau == 0.0) {
    return result;
  }
  const double dtau = tau / steps;
  const Matrix4d step = step_exponential(lambda, dtau, 0.0);
  for (int k = 0; k < steps; ++k) {
    result.m = step * result.m;
  }
  if (eta_residual(result.m) > 1e-9) {
    reorthonormalize(result.m);
  }
  return result;
}

} // namespace gravspin
