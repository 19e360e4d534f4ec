#pragma once

#include <Eigen/Dense>

#include <array>
#include <functional>
#include <stdexcept>
#include <string>

// Spacetime geometry: metrics, Christoffel symbols, and orthonormal frame
// (vierbein) fields on a coordinate chart.
//
// Conventions used throughout this library:
//   - Units G = c = 1. Lengths are in units of the Schwarzschild radius of
//     the scenario under study unless stated otherwise.
//   - Metric signature (-,+,+,+); eta = diag(-1, 1, 1, 1).
//   - Coordinate indices mu,nu,... run over the chart order (t, r, theta,
//     phi) for spherical charts and (t, x, y, z) for Cartesian ones.
//   - Frame indices a,b,... label the orthonormal frame axes 0..3.
//   - Vierbein storage: frame(a, mu)   = e_a^mu  (frame vectors in rows),
//                       coframe(a, mu) = e^a_mu  (frame covectors in rows),
//     so frame * g * frame^T = eta and coframe = (frame^{-1})^T.

namespace gravspin {

using Vector4d = Eigen::Vector4d;
using Matrix4d = Eigen::Matrix4d;

// Thrown when a chart is evaluated outside its domain of validity (at or
// inside the horizon, on the polar axis, nonpositive radius, ...).
struct ChartError : std::domain_error {
  explicit ChartError(const std::string& what) : std::domain_error(what) {}
};

// Event in chart coordinates.
using SpacetimePoint = Vector4d;

inline Matrix4d minkowski_eta() {
  Matrix4d eta = Matrix4d::Identity();
  eta(0, 0) = -1.0;
  return eta;
}

// Christoffel symbols of the second kind. gamma[lam](mu, nu) = Gamma^lam_{mu nu}.
using ChristoffelSymbols = std::array<Matrix4d, 4>;

// A metric on a chart: an evaluator for g_{mu nu}(x), an optional closed-form
// Christoffel evaluator, and a coordinate scale used to size finite-difference
// steps when no closed form is available.
struct MetricSpec {
  std::function<Matrix4d(const SpacetimePoint&)> components;
  std::function<ChristoffelSymbols(const SpacetimePoint&)> christoffel_analytic; // may be empty
  double fd_scale = 1.0;
};

// Minkowski metric on the Cartesian chart (t, x, y, z).
MetricSpec minkowski_metric();

// Schwarzschild metric on the chart (t, r, theta, phi), horizon radius r_s.
// r_s = 0 gives the Minkowski metric on the spherical chart. Evaluation
// requires r > r_s and theta strictly inside (0, pi).
MetricSpec schwarzschild_metric(double r_s);

// Christoffel symbols at x: the metric's closed form when present, otherwise
// central finite differences of the metric components.
ChristoffelSymbols christoffel(const MetricSpec& metric, const SpacetimePoint& x);

// Finite-difference Christoffel symbols (always differences the metric
// components; used as an independent oracle for the closed forms).
ChristoffelSymbols christoffel_fd(const MetricSpec& metric, const SpacetimePoint& x);

// Orthonormal frame at one event.
struct Vierbein {
  Matrix4d frame;   // frame(a, mu) = e_a^mu
  Matrix4d coframe; // coframe(a, mu) = e^a_mu
};

// A field of orthonormal frames over the chart. coframe_partials, when
// present, returns the four coordinate derivatives of the coframe matrix,
// partials[mu](a, nu) = d_mu e^a_nu. When absent, consumers fall back to
// central finite differences of `at`.
struct VierbeinField {
  std::function<Vierbein(const SpacetimePoint&)> at;
  std::function<std::array<Matrix4d, 4>(const SpacetimePoint&)> coframe_partials; // may be empty
};

// Static (hovering-observer) vierbein for the Schwarzschild chart at x.
Vierbein static_vierbein_schwarzschild(double r_s, const SpacetimePoint& x);

// The static vierbein as a field, with closed-form coframe derivatives.
VierbeinField static_vierbein_field(double r_s);

// Identity frame on the Cartesian Minkowski chart.
VierbeinField identity_vierbein_field();

// Coframe coordinate derivatives of a field at x: the field's closed form
// when present, otherwise central finite differences of `at`.
std::array<Matrix4d, 4> coframe_partials(const VierbeinField& field,
                                         const SpacetimePoint& x,
                                         double fd_scale = 1.0);

// max |e_a^mu g_{mu nu} e_b^nu - eta_ab|: how well the frame diagonalizes
// the metric at x.
double verify_vierbein(const MetricSpec& metric, const Vierbein& tetrad,
                       const SpacetimePoint& x);

} // namespace gravspin
