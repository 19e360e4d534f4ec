#include "gravspin/lorentz.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace gravspin;

namespace {

constexpr double kPi = 3.14159265358979323846;

Vector3d random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector3d v(gauss(rng), gauss(rng), gauss(rng));
  while (v.norm() < 1e-6) {
    v = Vector3d(gauss(rng), gauss(rng), gauss(rng));
  }
  return v.normalized();
}

} // namespace

TEST_CASE("standard boost of the rest momentum is the identity") {
  const LocalMomentum rest = LocalMomentum::from_spatial(Vector3d::Zero(), 1.3);
  CHECK((standard_boost(rest) - Matrix4d::Identity()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("boost along the 3 axis has the textbook block form") {
  const double chi = 0.85;
  const double m = 1.7;
  const LocalMomentum p = LocalMomentum::from_p3(m * std::sinh(chi), m);
  const Matrix4d boost = standard_boost(p);
  CHECK(boost(0, 0) == doctest::Approx(std::cosh(chi)).epsilon(1e-14));
  CHECK(boost(0, 3) == doctest::Approx(std::sinh(chi)).epsilon(1e-14));
  CHECK(boost(3, 0) == doctest::Approx(std::sinh(chi)).epsilon(1e-14));
  CHECK(boost(3, 3) == doctest::Approx(std::cosh(chi)).epsilon(1e-14));
  CHECK(boost(1, 1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(boost(2, 2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(boost(0, 1)) <= 1e-15);
  CHECK(std::abs(boost(1, 3)) <= 1e-15);
}

TEST_CASE("standard boost maps rest to p and is eta-orthogonal") {
  std::mt19937_64 rng(11ULL);
  std::uniform_real_distribution<double> rand_mag(0.0, 4.0);
  for (int trial = 0; trial < 10; ++trial) {
    const double m = 0.5 + rand_mag(rng);
    const LocalMomentum p =
        LocalMomentum::from_spatial(rand_mag(rng) * random_unit(rng), m);
    const Matrix4d boost = standard_boost(p);
    const Vector4d rest(m, 0.0, 0.0, 0.0);
    CHECK((boost * rest - p.p).cwiseAbs().maxCoeff() <= 1e-12 * p.p[0]);

    const Matrix4d eta = minkowski_eta();
    CHECK((boost.transpose() * eta * boost - eta).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((boost - boost.transpose()).cwiseAbs().maxCoeff() <= 1e-13);
    CHECK((eta * boost * eta * boost - Matrix4d::Identity()).cwiseAbs().maxCoeff() <=
          1e-12);
  }
}

TEST_CASE("wigner rotation of a boost pair is a clean rotation that round-trips") {
  std::mt19937_64 rng(12ULL);
  std::uniform_real_distribution<double> rapidity(-1.5, 1.5);
  for (int trial = 0; trial < 10; ++trial) {
    // A boost along a random direction applied to a momentum along the 3 axis.
    const double beta = rapidity(rng);
    const LocalMomentum kick = LocalMomentum::from_spatial(
        std::sinh(beta) * random_unit(rng), 1.0);
    const Matrix4d lambda = standard_boost(kick);
    const LocalMomentum p = LocalMomentum::from_p3(rapidity(rng), 1.0);

    const WignerRotation w = wigner_rotation(lambda, p);
    CHECK(wigner_residual(w) <= 1e-12);

    const AxisAngle aa = rotation_angle_axis(w);
    const WignerRotation rebuilt = rotation_about(aa.axis, aa.angle);
    CHECK((rebuilt.m - w.m).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("wigner rotations satisfy the composition cocycle") {
  std::mt19937_64 rng(13ULL);
  std::uniform_real_distribution<double> rapidity(-1.2, 1.2);
  std::uniform_real_distribution<double> rand_angle(-kPi, kPi);
  for (int trial = 0; trial < 6; ++trial) {
    const Matrix4d lambda2 =
        standard_boost(LocalMomentum::from_spatial(
            std::sinh(rapidity(rng)) * random_unit(rng), 1.0));
    const Matrix4d lambda1 =
        rotation_about(random_unit(rng), rand_angle(rng)).m *
        standard_boost(LocalMomentum::from_spatial(
            std::sinh(rapidity(rng)) * random_unit(rng), 1.0));
    const LocalMomentum p = LocalMomentum::from_p3(rapidity(rng), 1.0);
    const LocalMomentum p2 = LocalMomentum::from_spatial(
        (lambda2 * p.p).tail<3>(), 1.0);

    const Matrix4d composed = wigner_rotation(lambda1 * lambda2, p).m;
    const Matrix4d chained =
        wigner_rotation(lambda1, p2).m * wigner_rotation(lambda2, p).m;
    CHECK((composed - chained).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("a pure rotation is its own wigner rotation for every momentum") {
  std::mt19937_64 rng(14ULL);
  std::uniform_real_distribution<double> rand_angle(-kPi, kPi);
  std::uniform_real_distribution<double> rand_p(-3.0, 3.0);
  for (int trial = 0; trial < 6; ++trial) {
    const WignerRotation rot = rotation_about(random_unit(rng), rand_angle(rng));
    const LocalMomentum p = LocalMomentum::from_spatial(
        Vector3d(rand_p(rng), rand_p(rng), rand_p(rng)), 1.0);
    const WignerRotation w = wigner_rotation(rot.m, p);
    CHECK((w.m - rot.m).cwiseAbs().maxCoeff() <= 1e-13);
  }
}

TEST_CASE("axis-angle extraction uses the documented sign convention") {
  SUBCASE("identity") {
    WignerRotation identity;
    identity.m = Matrix4d::Identity();
    const AxisAngle aa = rotation_angle_axis(identity);
    CHECK(aa.angle == 0.0);
    CHECK((aa.axis - Vector3d(1.0, 0.0, 0.0)).norm() == 0.0);
  }
  SUBCASE("positive rotation about +y") {
    const AxisAngle aa = rotation_angle_axis(rotation_about(Vector3d(0, 1, 0), 0.3));
    CHECK(aa.angle == doctest::Approx(0.3).epsilon(1e-13));
    CHECK((aa.axis - Vector3d(0, 1, 0)).norm() <= 1e-13);
  }
  SUBCASE("rotation given about -y flips to +y with a negative angle") {
    const AxisAngle aa =
        rotation_angle_axis(rotation_about(Vector3d(0, -1, 0), 0.3));
    CHECK(aa.angle == doctest::Approx(-0.3).epsilon(1e-13));
    CHECK((aa.axis - Vector3d(0, 1, 0)).norm() <= 1e-13);
  }
  SUBCASE("half-turns are reported with angle +pi") {
    const AxisAngle aa =
        rotation_angle_axis(rotation_about(Vector3d(0, 0, -1), kPi));
    CHECK(aa.angle == doctest::Approx(kPi).epsilon(1e-13));
    CHECK((aa.axis - Vector3d(0, 0, 1)).norm() <= 1e-7);
  }
  SUBCASE("tiny angles survive extraction") {
    const AxisAngle aa =
        rotation_angle_axis(rotation_about(Vector3d(0, 1, 0), 1e-9));
    CHECK(aa.angle == doctest::Approx(1e-9).epsilon(1e-6));
    CHECK((aa.axis - Vector3d(0, 1, 0)).norm() <= 1e-6);
  }
  SUBCASE("round trip at random angles") {
    std::mt19937_64 rng(15ULL);
    std::uniform_real_distribution<double> rand_angle(-kPi, kPi);
    for (int trial = 0; trial < 12; ++trial) {
      const WignerRotation rot = rotation_about(random_unit(rng), rand_angle(rng));
      const AxisAngle aa = rotation_angle_axis(rot);
      CHECK(aa.angle > -kPi);
      CHECK(aa.angle <= kPi);
      const WignerRotation rebuilt = rotation_about(aa.axis, aa.angle);
      CHECK((rebuilt.m - rot.m).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("spin-1/2 representation is unitary with unit determinant") {
  std::mt19937_64 rng(16ULL);
  std::uniform_real_distribution<double> rand_angle(-kPi, kPi);
  for (int trial = 0; trial < 8; ++trial) {
    const WignerRotation rot = rotation_about(random_unit(rng), rand_angle(rng));
    const Matrix2cd d = spin_half_rep(rot);
    CHECK((d * d.adjoint() - Matrix2cd::Identity()).cwiseAbs().maxCoeff() <= 1e-13);
    CHECK(std::abs(d.determinant() - 1.0) <= 1e-13);
  }
}

TEST_CASE("spin-1/2 representation of a rotation about the 2 axis") {
  const double theta = 0.62;
  const Matrix2cd d = spin_half_rep(rotation_about(Vector3d(0, 1, 0), theta));
  CHECK(std::abs(d(0, 0) - std::cos(theta / 2.0)) <= 1e-13);
  CHECK(std::abs(d(0, 1) + std::sin(theta / 2.0)) <= 1e-13);
  CHECK(std::abs(d(1, 0) - std::sin(theta / 2.0)) <= 1e-13);
  CHECK(std::abs(d(1, 1) - std::cos(theta / 2.0)) <= 1e-13);
}

TEST_CASE("spin-1/2 representation is a homomorphism up to sign") {
  std::mt19937_64 rng(17ULL);
  std::uniform_real_distribution<double> rand_angle(-kPi, kPi);
  for (int trial = 0; trial < 8; ++trial) {
    const WignerRotation r1 = rotation_about(random_unit(rng), rand_angle(rng));
    const WignerRotation r2 = rotation_about(random_unit(rng), rand_angle(rng));
    WignerRotation r12;
    r12.m = r1.m * r2.m;
    const Matrix2cd lhs = spin_half_rep(r12);
    const Matrix2cd rhs = spin_half_rep(r1) * spin_half_rep(r2);
    const double plus = (lhs - rhs).cwiseAbs().maxCoeff();
    const double minus = (lhs + rhs).cwiseAbs().maxCoeff();
    CHECK(std::min(plus, minus) <= 1e-12);
  }
}

TEST_CASE("momentum and rotation constructors reject bad input") {
  CHECK_THROWS_AS(LocalMomentum::from_p3(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(LocalMomentum::from_p3(1.0, -2.0), std::invalid_argument);
  CHECK_THROWS_AS(
      LocalMomentum::from_spatial(Vector3d(std::nan(""), 0.0, 0.0), 1.0),
      std::invalid_argument);
  CHECK_THROWS_AS(rotation_about(Vector3d::Zero(), 0.5), std::invalid_argument);

  // An improper transformation sends the energy negative.
  const LocalMomentum p = LocalMomentum::from_p3(0.4, 1.0);
  CHECK_THROWS_AS(wigner_rotation(-Matrix4d::Identity(), p), std::runtime_error);
}
