#include "gravspin/geometry.hpp"

#include <cmath>
#include <sstream>

namespace gravspin {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_schwarzschild_domain(double r_s, const SpacetimePoint& x) {
  const double r = x[1];
  const double theta = x[2];
  if (!x.allFinite()) {
    throw ChartError("spherical chart: non-finite coordinates");
  }
  if (!(r > r_s)) {
    std::ostringstream msg;
    msg << "spherical chart: r = " << r << " is not outside the horizon r_s = "
        << r_s;
    throw ChartError(msg.str());
  }
  if (!(theta > 0.0 && theta < kPi)) {
    std::ostringstream msg;
    msg << "spherical chart: theta = " << theta
        << " is on or beyond the polar axis";
    throw ChartError(msg.str());
  }
}

void require_nonnegative_rs(double r_s) {
  if (!(r_s >= 0.0) || !std::isfinite(r_s)) {
    throw std::invalid_argument("schwarzschild_metric: r_s must be finite and >= 0");
  }
}

} // namespace

MetricSpec minkowski_metric() {
  MetricSpec spec;
  spec.components = [](const SpacetimePoint& x) {
    if (!x.allFinite()) {
      throw ChartError("cartesian chart: non-finite coordinates");
    }
    return minkowski_eta();
  };
  spec.christoffel_analytic = [](const SpacetimePoint&) {
    ChristoffelSymbols gamma;
    gamma.fill(Matrix4d::Zero());
    return gamma;
  };
  spec.fd_scale = 1.0;
  return spec;
}

MetricSpec schwarzschild_metric(double r_s) {
  require_nonnegative_rs(r_s);
  MetricSpec spec;
  spec.components = [r_s](const SpacetimePoint& x) {
    require_schwarzschild_domain(r_s, x);
    const double r = x[1];
    const double theta = x[2];
    const double f = 1.0 - r_s / r;
    Matrix4d g = Matrix4d::Zero();
    g(0, 0) = -f;
    g(1, 1) = 1.0 / f;
    g(2, 2) = r * r;
    g(3, 3) = r * r * std::sin(theta) * std::sin(theta);
    return g;
  };
  spec.christoffel_analytic = [r_s](const SpacetimePoint& x) {
    require_schwarzschild_domain(r_s, x);
    const double r = x[1];
    const double theta = x[2];
    const double f = 1.0 - r_s / r;
    const double fp = r_s / (r * r);
    const double st = std::sin(theta);
    const double ct = std::cos(theta);
    ChristoffelSymbols gamma;
    gamma.fill(Matrix4d::Zero());
    gamma[0](0, 1) = gamma[0](1, 0) = fp / (2.0 * f);
    gamma[1](0, 0) = f * fp / 2.0;
    gamma[1](1, 1) = -fp / (2.0 * f);
    gamma[1](2, 2) = -r * f;
    gamma[1](3, 3) = -r * f * st * st;
    gamma[2](1, 2) = gamma[2](2, 1) = 1.0 / r;
    gamma[2](3, 3) = -st * ct;
    gamma[3](1, 3) = gamma[3](3, 1) = 1.0 / r;
    gamma[3](2, 3) = gamma[3](3, 2) = ct / st;
    return gamma;
  };
  spec.fd_scale = std::max(r_s, 1.0);
  return spec;
}

ChristoffelSymbols christoffel(const MetricSpec& metric, const SpacetimePoint& x) {
  if (metric.christoffel_analytic) {
    return metric.christoffel_analytic(x);
  }
  return christoffel_fd(metric, x);
}

ChristoffelSymbols christoffel_fd(const MetricSpec& metric, const SpacetimePoint& x) {
  // dg[rho](mu, nu) = d_rho g_{mu nu} by central differences.
  std::array<Matrix4d, 4> dg;
  for (int rho = 0; rho < 4; ++rho) {
    const double h = 1e-6 * metric.fd_scale * std::max(1.0, std::abs(x[rho]));
    SpacetimePoint xp = x;
    SpacetimePoint xm = x;
    xp[rho] += h;
    xm[rho] -= h;
    dg[rho] = (metric.components(xp) - metric.components(xm)) / (2.0 * h);
  }
  const Matrix4d g_inv = metric.components(x).inverse();
  ChristoffelSymbols gamma;
  gamma.fill(Matrix4d::Zero());
  for (int lam = 0; lam < 4; ++lam) {
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = 0; nu < 4; ++nu) {
        double sum = 0.0;
        for (int sig = 0; sig < 4; ++sig) {
          sum += g_inv(lam, sig) *
                 (dg[mu](sig, nu) + dg[nu](sig, mu) - dg[sig](mu, nu));
        }
        gamma[lam](mu, nu) = 0.5 * sum;
      }
    }
  }
  return gamma;
}

Vierbein static_vierbein_schwarzschild(double r_s, const SpacetimePoint& x) {
  require_nonnegative_rs(r_s);
  require_schwarzschild_domain(r_s, x);
  const double r = x[1];
  const double theta = x[2];
  const double sf = std::sqrt(1.0 - r_s / r);
  const double st = std::sin(theta);
  Vierbein tetrad;
  tetrad.frame = Matrix4d::Zero();
  tetrad.coframe = Matrix4d::Zero();
  tetrad.frame(0, 0) = 1.0 / sf;
  tetrad.frame(1, 1) = sf;
  tetrad.frame(2, 2) = 1.0 / r;
  tetrad.frame(3, 3) = 1.0 / (r * st);
  tetrad.coframe(0, 0) = sf;
  tetrad.coframe(1, 1) = 1.0 / sf;
  tetrad.coframe(2, 2) = r;
  tetrad.coframe(3, 3) = r * st;
  return tetrad;
}

VierbeinField static_vierbein_field(double r_s) {
  require_nonnegative_rs(r_s);
  VierbeinField field;
  field.at = [r_s](const SpacetimePoint& x) {
    return static_vierbein_schwarzschild(r_s, x);
  };
  field.coframe_partials = [r_s](const SpacetimePoint& x) {
    require_schwarzschild_domain(r_s, x);
    const double r = x[1];
    const double theta = x[2];
    const double f = 1.0 - r_s / r;
    const double sf = std::sqrt(f);
    const double fp = r_s / (r * r);
    std::array<Matrix4d, 4> partials;
    partials.fill(Matrix4d::Zero());
    // d_r of diag(sqrt(f), 1/sqrt(f), r, r sin(theta)).
    partials[1](0, 0) = fp / (2.0 * sf);
    partials[1](1, 1) = -fp / (2.0 * f * sf);
    partials[1](2, 2) = 1.0;
    partials[1](3, 3) = std::sin(theta);
    // d_theta: only the phi leg depends on theta.
    partials[2](3, 3) = r * std::cos(theta);
    return partials;
  };
  return field;
}

VierbeinField identity_vierbein_field() {
  VierbeinField field;
  field.at = [](const SpacetimePoint& x) {
    if (!x.allFinite()) {
      throw ChartError("cartesian chart: non-finite coordinates");
    }
    Vierbein tetrad;
    tetrad.frame = Matrix4d::Identity();
    tetrad.coframe = Matrix4d::Identity();
    return tetrad;
  };
  field.coframe_partials = [](const SpacetimePoint&) {
    std::array<Matrix4d, 4> partials;
    partials.fill(Matrix4d::Zero());
    return partials;
  };
  return field;
}

std::array<Matrix4d, 4> coframe_partials(const VierbeinField& field,
                                         const SpacetimePoint& x,
                                         double fd_scale) {
  if (field.coframe_partials) {
    return field.coframe_partials(x);
  }
  std::array<Matrix4d, 4> partials;
  for (int mu = 0; mu < 4; ++mu) {
    const double h = 1e-6 * fd_scale * std::max(1.0, std::abs(x[mu]));
    SpacetimePoint xp = x;
    SpacetimePoint xm = x;
    xp[mu] += h;
    xm[mu] -= h;
    partials[mu] = (field.at(xp).coframe - field.at(xm).coframe) / (2.0 * h);
  }
  return partials;
}

double verify_vierbein(const MetricSpec& metric, const Vierbein& tetrad,
                       const SpacetimePoint& x) {
  const Matrix4d g = metric.components(x);
  const Matrix4d product = tetrad.frame * g * tetrad.frame.transpose();
  return (product - minkowski_eta()).cwiseAbs().maxCoeff();
}

} // namespace gravspin
