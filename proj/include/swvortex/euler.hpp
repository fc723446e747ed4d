#pragma once

// Steady vortexes of the compressible Euler equations built from the same
// angular velocity laws as the shallow water vortexes.  A radially symmetric
// flow with u_r = 0 and u_theta = r omega(r) is steady iff
//
//     r p'(r) = rho(r) u_theta(r)^2.
//
// Two closed constructions are provided:
//   Isentropic  p = rho^gamma,
//               rho(r) = (rho0 - (gamma-1)/gamma * I(r))^(1/(gamma-1))
//   Isochoric   rho = rho0,  p(r) = p0 - rho0 * I(r)
// with I(r) = integral of s omega(s)^2 over [r, anchor].  The anchor is r0 for
// compact families and 8 r0 for the Gaussian.  With gamma = 2, g = 2 and
// rho0 = h0 the isentropic density coincides with the shallow water depth.

#include <optional>

#include "swvortex/quadrature.hpp"
#include "swvortex/vortex.hpp"

namespace swvortex {

enum class EulerKind { Isentropic, Isochoric };

struct EulerConserved {
  double rho = 0.0;
  double rho_u = 0.0;
  double rho_v = 0.0;
  double rho_e = 0.0;
};

struct EulerParams {
  EulerKind kind = EulerKind::Isentropic;
  double gamma_gas = 1.4;
  double rho0 = 1.0;
  double p0 = 1.0;
};

class EulerVortexField {
 public:
  /// Throws std::invalid_argument when gamma_gas <= 1, rho0 <= 0 or when the
  /// density (isentropic) or pressure (isochoric) at r = 0 is not positive.
  EulerVortexField(const VortexSpec& spec, EulerParams params);

  const EulerParams& params() const { return params_; }
  const RadialProfile& profile() const { return profile_; }

  /// Integral of s omega(s)^2 ds over [r, anchor]; zero beyond the anchor.
  /// Closed form for CosPower, composite Gauss-Legendre otherwise.
  double swirl_integral(double r) const;

  double density(double r) const;
  double pressure(double r) const;

 private:
  RadialProfile profile_;
  EulerParams params_;
  GaussLegendre rule_;
  double anchor_;
};

/// Isentropic density at radius r; rejects gamma_gas <= 1.
double isentropic_density(const EulerVortexField& field, double r);
/// Isochoric pressure at radius r.
double isochoric_pressure(const EulerVortexField& field, double r);

/// Conserved Euler variables (rho, rho u, rho v, rho E) at (x, y, t).  With a
/// period, the offset from the moving center is wrapped to the nearest image.
EulerConserved eval_euler_cartesian(const EulerVortexField& field, double x, double y,
                                    double t, const std::optional<Periodic>& period = std::nullopt);

/// Gauss-Legendre cell average of the conserved Euler variables.
EulerConserved euler_cell_average(const EulerVortexField& field, const Cell& cell, double t,
                                  const GaussLegendre& rule,
                                  const std::optional<Periodic>& period = std::nullopt);

}  // namespace swvortex
