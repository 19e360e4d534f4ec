#include "gravspin/schwarzschild.hpp"

#include "gravspin/geometry.hpp"
#include "gravspin/transport.hpp"
#include "gravspin/wavepacket.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

using namespace gravspin;

namespace {

constexpr double kSqrtPi = 1.77245385090551602730;

SchwarzschildScenario reference_scenario() {
  // r_s/r = 0.9, v/c = 0.8, w/mc = 0.1 in geometric units with m = r_s = 1.
  return SchwarzschildScenario::from_dimensionless(0.9, 0.8, 0.1);
}

} // namespace

TEST_CASE("dimensionless constructor reproduces the stated configuration") {
  const SchwarzschildScenario s = reference_scenario();
  CHECK(s.r_s == 1.0);
  CHECK(s.r == doctest::Approx(1.0 / 0.9).epsilon(1e-15));
  CHECK(s.f() == doctest::Approx(0.1).epsilon(1e-13));
  CHECK(std::cosh(s.xi) == doctest::Approx(5.0 / 3.0).epsilon(1e-14));
  CHECK(std::sinh(s.xi) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(s.q3() == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(s.tau_s() == doctest::Approx(10.0).epsilon(1e-15));
  CHECK_NOTHROW(s.validate());
}

TEST_CASE("scenario validation rejects unphysical parameters") {
  CHECK_THROWS_AS(SchwarzschildScenario::from_dimensionless(1.0, 0.8, 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(SchwarzschildScenario::from_dimensionless(0.0, 0.8, 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(SchwarzschildScenario::from_dimensionless(-0.2, 0.8, 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(SchwarzschildScenario::from_dimensionless(0.9, 1.0, 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(SchwarzschildScenario::from_dimensionless(0.9, -0.1, 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(SchwarzschildScenario::from_dimensionless(0.9, 0.8, -0.1),
                  std::invalid_argument);
  SchwarzschildScenario inside;
  inside.r_s = 1.0;
  inside.r = 0.5;
  CHECK_THROWS_AS(inside.validate(), ChartError);
}

TEST_CASE("precession scale matches its closed form and zeros") {
  const SchwarzschildScenario s = reference_scenario();
  // Independent arithmetic: (cosh^2 sinh / r)(1 - r_s/(2 r f)) sqrt(f)
  const double ch = 5.0 / 3.0, sh = 4.0 / 3.0, r = 1.0 / 0.9, f = 0.1;
  const double expected =
      (ch * ch * sh / r) * (1.0 - 1.0 / (2.0 * r * f)) * std::sqrt(f);
  CHECK(l_factor(s) == doctest::Approx(expected).epsilon(1e-13));
  CHECK(l_factor(s) == doctest::Approx(-3.6893239368631093).epsilon(1e-12));

  // A static observer has no orbital precession at all.
  SchwarzschildScenario at_rest = s;
  at_rest.xi = 0.0;
  CHECK(l_factor(at_rest) == 0.0);

  // At r = 3 r_s / 2 the two frame effects cancel for every speed.
  const SchwarzschildScenario photon_radius =
      SchwarzschildScenario::from_dimensionless(2.0 / 3.0, 0.8, 0.1);
  CHECK(std::abs(l_factor(photon_radius)) <= 1e-12);
}

TEST_CASE("rotation frequency at the packet centre obeys the exact identity") {
  const SchwarzschildScenario s = reference_scenario();
  const double big_l = l_factor(s);
  CHECK(omega(s, s.q3()) * std::cosh(s.xi) ==
        doctest::Approx(big_l).epsilon(1e-14));
  // At zero momentum the frequency equals the precession scale itself.
  CHECK(omega(s, 0.0) == doctest::Approx(big_l).epsilon(1e-15));
}

TEST_CASE("small-width coefficients match frozen values and derivatives") {
  const SchwarzschildScenario s = reference_scenario();
  const DecoherenceCoefficients c = small_w_coefficients(s);

  // Frozen values, derived by hand from the closed forms.
  const double big_l = -3.6893239368631093;
  const double expected_a = big_l * 0.0032 * (-0.219375);
  const double expected_b = big_l * 0.018;
  CHECK(c.A == doctest::Approx(expected_a).epsilon(1e-12));
  CHECK(c.B == doctest::Approx(expected_b).epsilon(1e-12));
  CHECK(c.tau_s == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(std::abs(c.B) * c.tau_s ==
        doctest::Approx(0.66407830863535968).epsilon(1e-12));

  // Up to an overall sign convention (only A^2 and B^2 are observable), B
  // is the first derivative of the frequency times the width and A is half
  // the second derivative times the width squared: verify both against
  // finite differences of omega around the packet centre.
  const double q3 = s.q3();
  {
    const double h = 1e-5;
    const double fd1 = (omega(s, q3 + h) - omega(s, q3 - h)) / (2.0 * h);
    CHECK(c.B == doctest::Approx(-fd1 * s.w).epsilon(1e-8));
  }
  {
    const double h = 1e-3;
    const double fd2 =
        (omega(s, q3 + h) - 2.0 * omega(s, q3) + omega(s, q3 - h)) / (h * h);
    CHECK(c.A == doctest::Approx(-0.5 * fd2 * s.w * s.w).epsilon(1e-5));
  }
}

TEST_CASE("the dimensionless decoherence rate does not depend on the width") {
  std::vector<double> products;
  for (const double w : {0.01, 0.1, 0.3}) {
    const SchwarzschildScenario s =
        SchwarzschildScenario::from_dimensionless(0.9, 0.8, w);
    const DecoherenceCoefficients c = small_w_coefficients(s);
    products.push_back(std::abs(c.B) * c.tau_s);
  }
  CHECK(std::abs(products[0] - products[1]) <= 1e-13);
  CHECK(std::abs(products[1] - products[2]) <= 1e-13);
}

TEST_CASE("approximate phase average limits") {
  const SchwarzschildScenario s = reference_scenario();
  const DecoherenceCoefficients c = small_w_coefficients(s);
  CHECK(phase_average_approx(c, 0.0) == 1.0);
  DecoherenceCoefficients free_fall{0.0, 0.0, c.tau_s};
  CHECK(phase_average_approx(free_fall, 123.0) == 1.0);
  // Decay is monotone in |tau|.
  CHECK(phase_average_approx(c, 5.0) < phase_average_approx(c, 1.0));
  CHECK(phase_average_approx(c, 1.0) < 1.0);
}

TEST_CASE("exact phase average: limits, grid convergence, independent oracle") {
  const SchwarzschildScenario s = reference_scenario();
  CHECK(std::abs(exact_phase_average(s, 0.0) - 1.0) <= 1e-12);

  // Zero width: a momentum eigenstate never dephases.
  const SchwarzschildScenario eigen =
      SchwarzschildScenario::from_dimensionless(0.9, 0.8, 0.0);
  CHECK(std::abs(exact_phase_average(eigen, 37.0) - 1.0) <= 1e-12);

  const double tau = s.tau_s();
  GridSpec fine;
  fine.nodes = 257;
  CHECK(std::abs(exact_phase_average(s, tau) -
                 exact_phase_average(s, tau, fine)) <= 1e-10);

  // Independent oracle: direct trapezoid sum of the dephasing integral.
  const int n = 4001;
  const double span = 8.0;
  const double h = 2.0 * span / (n - 1);
  std::complex<double> acc(0.0, 0.0);
  double mass_total = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = -span + h * i;
    const double plain = (i == 0 || i == n - 1) ? 0.5 * h : h;
    const double density = plain * std::exp(-x * x) / kSqrtPi;
    const double p3 = s.q3() + s.w * x;
    const double phase = omega(s, p3) * tau;
    acc += density * std::complex<double>(std::cos(phase), std::sin(phase));
    mass_total += density;
  }
  const double oracle = std::abs(acc) / mass_total;
  CHECK(exact_phase_average(s, tau) == doctest::Approx(oracle).epsilon(1e-9));
}

TEST_CASE("long-time evolution fully dephases the superposition") {
  const SchwarzschildScenario s = reference_scenario();
  GridSpec wide;
  wide.kind = GridKind::trapezoid;
  wide.nodes = 20001;
  const double late = 1000.0 * s.tau_s();
  CHECK(exact_phase_average(s, late, wide) <= 0.05);
}

TEST_CASE("entropy curve: approximate branch reproduces the closed form") {
  const SchwarzschildScenario s = reference_scenario();
  const DecoherenceCoefficients c = small_w_coefficients(s);
  std::vector<double> taus;
  for (int i = 0; i <= 12; ++i) {
    taus.push_back(0.5 * s.tau_s() * i);
  }
  const std::vector<double> curve =
      entropy_curve(s, taus, EntropyMode::approx);
  REQUIRE(curve.size() == taus.size());
  for (std::size_t i = 0; i < taus.size(); ++i) {
    const double avg = phase_average_approx(c, taus[i]);
    const double p = 0.5 * (1.0 - avg);
    CHECK(std::abs(curve[i] - binary_entropy(p)) <= 1e-12);
  }
  CHECK(curve.front() == 0.0);
}

TEST_CASE("entropy curve: exact and approximate branches agree at small width") {
  const SchwarzschildScenario s = reference_scenario();
  std::vector<double> taus;
  for (int i = 0; i <= 40; ++i) {
    taus.push_back(6.0 * s.tau_s() * i / 40.0);
  }
  const std::vector<double> approx =
      entropy_curve(s, taus, EntropyMode::approx);
  const std::vector<double> exact = entropy_curve(s, taus, EntropyMode::exact);
  double max_delta = 0.0;
  for (std::size_t i = 0; i < taus.size(); ++i) {
    max_delta = std::max(max_delta, std::abs(approx[i] - exact[i]));
  }
  CHECK(max_delta <= 2e-3);
  CHECK(exact.front() == 0.0);

  const std::vector<double> parallel =
      entropy_curve(s, taus, EntropyMode::exact, GridSpec{}, Exec::parallel);
  for (std::size_t i = 0; i < taus.size(); ++i) {
    CHECK(parallel[i] == exact[i]);
  }
}

TEST_CASE("decoherence rate curve: frozen landmark and analytic shape") {
  const std::vector<double> xs = {0.1, 0.25, 0.37716126056030796, 0.5,
                                  0.66666666666666663, 0.8, 0.9, 0.9999};
  const std::vector<double> curve = decoherence_rate_curve(xs, 0.8, 0.1);
  REQUIRE(curve.size() == xs.size());

  // Frozen landmark at r_s/r = 0.9.
  CHECK(curve[6] == doctest::Approx(0.66407830863535968).epsilon(1e-12));
  // The curve vanishes at the cancellation radius and diverges near the
  // horizon.
  CHECK(curve[4] <= 1e-12);
  CHECK(curve[7] > 30.0);

  // Over the whole range the curve is proportional to
  // x (2 - 3x) / (2 sqrt(1 - x)) with a constant that depends only on the
  // speed, so the ratio must be flat.
  const auto shape = [](double x) {
    return std::abs(x * (2.0 - 3.0 * x)) / (2.0 * std::sqrt(1.0 - x));
  };
  const double ratio0 = curve[0] / shape(xs[0]);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i == 4) {
      continue; // both sides vanish at the cancellation radius
    }
    CHECK(curve[i] / shape(xs[i]) == doctest::Approx(ratio0).epsilon(1e-12));
  }

  // The interior maximum sits at the analytic root of 9x^2 - 14x + 4 = 0.
  const double x_peak = 0.37716126056030796;
  const std::vector<double> near_peak =
      decoherence_rate_curve({x_peak - 1e-4, x_peak, x_peak + 1e-4}, 0.8, 0.1);
  CHECK(near_peak[1] >= near_peak[0]);
  CHECK(near_peak[1] >= near_peak[2]);

  CHECK_THROWS_AS(decoherence_rate_curve({0.0}, 0.8, 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(decoherence_rate_curve({1.0}, 0.8, 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(decoherence_rate_curve({0.5}, 0.8, 0.0),
                  std::invalid_argument);
}

TEST_CASE("rate curve evaluation is identical under both execution policies") {
  std::vector<double> xs;
  for (int i = 1; i <= 60; ++i) {
    xs.push_back(i / 61.0);
  }
  const std::vector<double> serial =
      decoherence_rate_curve(xs, 0.8, 0.1, Exec::serial);
  const std::vector<double> parallel =
      decoherence_rate_curve(xs, 0.8, 0.1, Exec::parallel);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(serial[i] == parallel[i]);
  }
}

TEST_CASE("closed-form generator equals the transport pipeline generator") {
  const SchwarzschildScenario s = reference_scenario();
  const Matrix4d closed = lambda_generator(s);
  const SpacetimeFrame frame = scenario_frame(s);
  const Trajectory traj = scenario_trajectory(s);
  for (const double tau : {0.0, 17.3}) {
    const Matrix4d pipeline = infinitesimal_lt(traj, frame, tau, s.m);
    CHECK((closed - pipeline).cwiseAbs().maxCoeff() <= 1e-12);
  }

  // The generator annihilates the local four-momentum of the orbit.
  Vector4d q(s.m * std::cosh(s.xi), 0.0, 0.0, s.m * std::sinh(s.xi));
  CHECK((closed * q).cwiseAbs().maxCoeff() <= 1e-12);
}
