#include "swvortex/euler.hpp"

#include <cmath>
#include <stdexcept>

namespace swvortex {

namespace {

constexpr std::size_t kPanels = 64;
constexpr std::size_t kPanelPoints = 16;

// Tail of the Gaussian beyond 8 r0 is below 1e-28 of its peak.
constexpr double kGaussianAnchor = 8.0;

}  // namespace

EulerVortexField::EulerVortexField(const VortexSpec& spec, EulerParams params)
    : profile_(spec), params_(params), rule_(kPanelPoints) {
  if (!(params_.gamma_gas > 1.0)) {
    throw std::invalid_argument("gas-gamma must be greater than 1");
  }
  if (!(params_.rho0 > 0.0)) {
    throw std::invalid_argument("rho0 must be positive");
  }
  anchor_ = is_compact(spec.family) ? spec.r0 : kGaussianAnchor * spec.r0;
  if (params_.kind == EulerKind::Isentropic) {
    const double base =
        params_.rho0 - (params_.gamma_gas - 1.0) / params_.gamma_gas * swirl_integral(0.0);
    if (!(base > 0.0)) {
      throw std::invalid_argument("isentropic vortex: density at the center is not positive");
    }
  } else if (!(pressure(0.0) > 0.0)) {
    throw std::invalid_argument("isochoric vortex: pressure at the center is not positive");
  }
}

double EulerVortexField::swirl_integral(double r) const {
  if (r >= anchor_) return 0.0;
  const VortexSpec& spec = profile_.spec();
  if (std::holds_alternative<family::CosPower>(spec.family)) {
    // g h' = r omega^2 integrated from r to r0.
    return spec.g * (spec.h0 - profile_.depth(r));
  }
  return composite_integrate(
      rule_, kPanels,
      [this](double s) {
        const double w = profile_.omega(s);
        return s * w * w;
      },
      r, anchor_);
}

double EulerVortexField::density(double r) const {
  if (params_.kind == EulerKind::Isochoric) return params_.rho0;
  const double gm = params_.gamma_gas;
  const double base = params_.rho0 - (gm - 1.0) / gm * swirl_integral(r);
  return std::pow(base, 1.0 / (gm - 1.0));
}

double EulerVortexField::pressure(double r) const {
  if (params_.kind == EulerKind::Isentropic) {
    return std::pow(density(r), params_.gamma_gas);
  }
  return params_.p0 - params_.rho0 * swirl_integral(r);
}

double isentropic_density(const EulerVortexField& field, double r) {
  if (field.params().kind != EulerKind::Isentropic) {
    throw std::invalid_argument("isentropic_density requires an isentropic field");
  }
  return field.density(r);
}

double isochoric_pressure(const EulerVortexField& field, double r) {
  if (field.params().kind != EulerKind::Isochoric) {
    throw std::invalid_argument("isochoric_pressure requires an isochoric field");
  }
  return field.pressure(r);
}

EulerConserved eval_euler_cartesian(const EulerVortexField& field, double x, double y,
                                    double t, const std::optional<Periodic>& period) {
  const VortexSpec& spec = field.profile().spec();
  double zx = x - spec.center.x - spec.u_inf.x * t;
  double zy = y - spec.center.y - spec.u_inf.y * t;
  if (period) {
    zx -= period->lx * std::round(zx / period->lx);
    zy -= period->ly * std::round(zy / period->ly);
  }
  const double r = std::hypot(zx, zy);
  const double w = field.profile().omega(r);
  const double ux = spec.u_inf.x - w * zy;
  const double uy = spec.u_inf.y + w * zx;
  const double rho = field.density(r);
  const double p = field.pressure(r);
  return EulerConserved{rho, rho * ux, rho * uy,
                        p / (field.params().gamma_gas - 1.0) + 0.5 * rho * (ux * ux + uy * uy)};
}

EulerConserved euler_cell_average(const EulerVortexField& field, const Cell& cell, double t,
                                  const GaussLegendre& rule,
                                  const std::optional<Periodic>& period) {
  const double cx = 0.5 * (cell.x_lo + cell.x_hi);
  const double cy = 0.5 * (cell.y_lo + cell.y_hi);
  const double hx = 0.5 * (cell.x_hi - cell.x_lo);
  const double hy = 0.5 * (cell.y_hi - cell.y_lo);
  EulerConserved sum;
  for (std::size_t j = 0; j < rule.size(); ++j) {
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double w = 0.25 * rule.weights[i] * rule.weights[j];
      const EulerConserved u =
          eval_euler_cartesian(field, cx + hx * rule.nodes[i], cy + hy * rule.nodes[j], t, period);
      sum.rho += w * u.rho;
      sum.rho_u += w * u.rho_u;
      sum.rho_v += w * u.rho_v;
      sum.rho_e += w * u.rho_e;
    }
  }
  return sum;
}

}  // namespace swvortex
