// Timing comparison of the serial reference implementations against the
// OpenMP-parallel kernels, with agreement residuals so the comparison is
// also a correctness spot-check.

#include "gravspin/schwarzschild.hpp"
#include "gravspin/transport.hpp"
#include "gravspin/wavepacket.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(const Clock::time_point& start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const char* kernel, double serial_s, double parallel_s,
            double agreement) {
  std::printf("%-22s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   "
              "max|delta| %.3e\n",
              kernel, serial_s, parallel_s, serial_s / parallel_s, agreement);
}

} // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; parallel policy falls back to serial.\n");
#endif

  const gravspin::SchwarzschildScenario s =
      gravspin::SchwarzschildScenario::from_dimensionless(0.9, 0.8, 0.1);
  const gravspin::SpacetimeFrame frame = gravspin::scenario_frame(s);
  const gravspin::Trajectory traj = gravspin::scenario_trajectory(s);

  {
    // evolve_spin over a wide trapezoid grid.
    gravspin::GridSpec spec;
    spec.kind = gravspin::GridKind::trapezoid;
    spec.nodes = 200001;
    const gravspin::WavePacket packet =
        gravspin::gaussian_packet(s.q3(), s.w, s.m, spec);
    const gravspin::LorentzTransform big =
        gravspin::integrate_constant_generator(gravspin::lambda_generator(s), 0.5);

    auto start = Clock::now();
    const auto rho_serial =
        gravspin::evolve_spin(packet, big.m, gravspin::Exec::serial);
    const double serial_s = seconds_since(start);

    start = Clock::now();
    const auto rho_parallel =
        gravspin::evolve_spin(packet, big.m, gravspin::Exec::parallel);
    const double parallel_s = seconds_since(start);

    report("evolve_spin", serial_s, parallel_s,
           (rho_serial.rho - rho_parallel.rho).cwiseAbs().maxCoeff());
  }

  {
    // Time-ordered integration with a long step count.
    const int steps = 200000;
    const double tau_f = 10.0 * s.tau_s();

    auto start = Clock::now();
    const auto big_serial = gravspin::integrate_lorentz(
        traj, frame, 0.0, tau_f, steps, gravspin::Exec::serial, s.m);
    const double serial_s = seconds_since(start);

    start = Clock::now();
    const auto big_parallel = gravspin::integrate_lorentz(
        traj, frame, 0.0, tau_f, steps, gravspin::Exec::parallel, s.m);
    const double parallel_s = seconds_since(start);

    report("integrate_lorentz", serial_s, parallel_s,
           (big_serial.m - big_parallel.m).cwiseAbs().maxCoeff());
  }

  {
    // Exact-mode entropy curve across many times.
    std::vector<double> taus(4096);
    for (std::size_t i = 0; i < taus.size(); ++i) {
      taus[i] = 6.0 * s.tau_s() * static_cast<double>(i) / (taus.size() - 1);
    }
    gravspin::GridSpec spec;
    spec.kind = gravspin::GridKind::trapezoid;
    spec.nodes = 4001;

    auto start = Clock::now();
    const auto curve_serial = gravspin::entropy_curve(
        s, taus, gravspin::EntropyMode::exact, spec, gravspin::Exec::serial);
    const double serial_s = seconds_since(start);

    start = Clock::now();
    const auto curve_parallel = gravspin::entropy_curve(
        s, taus, gravspin::EntropyMode::exact, spec, gravspin::Exec::parallel);
    const double parallel_s = seconds_since(start);

    double agreement = 0.0;
    for (std::size_t i = 0; i < taus.size(); ++i) {
      agreement = std::max(agreement,
                           std::abs(curve_serial[i] - curve_parallel[i]));
    }
    report("entropy_curve", serial_s, parallel_s, agreement);
  }

  return 0;
}
