#include "gravspin/lorentz.hpp"

#include <Eigen/Geometry>

#include <cmath>
#include <stdexcept>

namespace gravspin {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_valid_mass(double mass) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw std::invalid_argument("momentum: mass must be finite and > 0");
  }
}

} // namespace

LocalMomentum LocalMomentum::from_spatial(const Vector3d& p_spatial, double mass) {
  require_valid_mass(mass);
  if (!p_spatial.allFinite()) {
    throw std::invalid_argument("momentum: non-finite spatial components");
  }
  LocalMomentum p;
  p.mass = mass;
  p.p << std::sqrt(p_spatial.squaredNorm() + mass * mass), p_spatial[0],
      p_spatial[1], p_spatial[2];
  return p;
}

LocalMomentum LocalMomentum::from_p3(double p3, double mass) {
  return from_spatial(Vector3d(0.0, 0.0, p3), mass);
}

Matrix4d standard_boost(const LocalMomentum& p) {
  require_valid_mass(p.mass);
  const Vector3d ps = p.p.tail<3>();
  const double m = p.mass;
  const double gamma = p.p[0] / m;
  Matrix4d boost = Matrix4d::Identity();
  boost(0, 0) = gamma;
  const double n2 = ps.squaredNorm();
  for (int i = 0; i < 3; ++i) {
    boost(0, i + 1) = boost(i + 1, 0) = ps[i] / m;
  }
  if (std::sqrt(n2) / m >= 1e-12) {
    for (int i = 0; i < 3; ++i) {
      for (int k = 0; k < 3; ++k) {
        boost(i + 1, k + 1) += (gamma - 1.0) * ps[i] * ps[k] / n2;
      }
    }
  }
  return boost;
}

WignerRotation wigner_rotation(const Matrix4d& lambda, const LocalMomentum& p) {
  const Vector4d transformed = lambda * p.p;
  if (!(transformed[0] > 0.0)) {
    throw std::runtime_error(
        "wigner_rotation: transformed momentum has non-positive energy");
  }
  // Rebuild the outgoing momentum on-shell from its spatial part so the
  // inverse boost is exactly a group element.
  const LocalMomentum p_out =
      LocalMomentum::from_spatial(transformed.tail<3>(), p.mass);
  const Matrix4d eta = minkowski_eta();
  WignerRotation w;
  w.m = eta * standard_boost(p_out) * eta * lambda * standard_boost(p);
  return w;
}

double wigner_residual(const WignerRotation& w) {
  double res = std::abs(w.m(0, 0) - 1.0);
  for (int i = 1; i < 4; ++i) {
    res = std::max(res, std::abs(w.m(0, i)));
    res = std::max(res, std::abs(w.m(i, 0)));
  }
  const Eigen::Matrix3d r = w.m.block<3, 3>(1, 1);
  res = std::max(
      res, (r.transpose() * r - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff());
  res = std::max(res, std::abs(r.determinant() - 1.0));
  return res;
}

AxisAngle rotation_angle_axis(const WignerRotation& w) {
  const Eigen::Matrix3d r = w.m.block<3, 3>(1, 1);
  Eigen::Quaterniond quat(r);
  if (quat.w() < 0.0) {
    quat.coeffs() = -quat.coeffs();
  }
  const Vector3d vec = quat.vec();
  const double s = vec.norm();
  AxisAngle result{Vector3d(1.0, 0.0, 0.0), 0.0};
  if (s < 1e-15) {
    return result; // identity (or numerically indistinguishable from it)
  }
  result.axis = vec / s;
  result.angle = 2.0 * std::atan2(s, quat.w()); // in [0, pi]

  // Deterministic sign: make the axis's first significant component positive.
  for (int i = 0; i < 3; ++i) {
    if (std::abs(result.axis[i]) > 1e-12) {
      if (result.axis[i] < 0.0) {
        result.axis = -result.axis;
        result.angle = -result.angle;
        if (result.angle == -kPi) {
          result.angle = kPi; // (n, -pi) and (n, pi) are the same rotation
        }
      }
      break;
    }
  }
  return result;
}

WignerRotation rotation_about(const Vector3d& axis, double angle) {
  const double n = axis.norm();
  if (!(n > 0.0) || !axis.allFinite() || !std::isfinite(angle)) {
    throw std::invalid_argument("rotation_about: need a finite nonzero axis");
  }
  WignerRotation w;
  w.m = Matrix4d::Identity();
  w.m.block<3, 3>(1, 1) =
      Eigen::AngleAxisd(angle, axis / n).toRotationMatrix();
  return w;
}

Matrix2cd spin_half_rep(const WignerRotation& w) {
  const AxisAngle aa = rotation_angle_axis(w);
  const double c = std::cos(aa.angle / 2.0);
  const double s = std::sin(aa.angle / 2.0);
  const std::complex<double> i(0.0, 1.0);
  Matrix2cd sigma_dot_n;
  sigma_dot_n << aa.axis[2], aa.axis[0] - i * aa.axis[1],
      aa.axis[0] + i * aa.axis[1], -aa.axis[2];
  return c * Matrix2cd::Identity() - i * s * sigma_dot_n;
}

} // namespace gravspin
