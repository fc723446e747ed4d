#pragma once

// Exact steady (and uniformly translating) vortex solutions of the 2D shallow
// water equations on a flat bottom.
//
// Every family prescribes an angular velocity omega(r) and a depth h(r) that
// satisfy the cyclostrophic balance  g h'(r) = r omega(r)^2  exactly, with
// tangential velocity u_theta = r omega.  Four families are provided:
//
//   CosPower(p)   omega = Gamma (1 + cos(pi r / r0))^p on [0, r0], C^{2p}
//   Gaussian      omega = Gamma exp(-(r / r0)^2), not compactly supported
//   ExpBump(p)    h = h0 - Gamma^2 exp(-1 / (1 - s)^p), s = (r / r0)^2, C^inf
//   ArctanBump(p) h = h0 - Gamma^2 exp(-1 / atan(1 - s)^p), C^inf
//
// The three compact families are exactly (h0, 0) for r >= r0.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "swvortex/quadrature.hpp"

namespace swvortex {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

namespace family {
struct CosPower {
  int p = 1;
};
struct Gaussian {};
struct ExpBump {
  int p = 2;
};
struct ArctanBump {
  int p = 2;
};
}  // namespace family

using VortexFamily =
    std::variant<family::CosPower, family::Gaussian, family::ExpBump, family::ArctanBump>;

/// Short identifier used on the command line and in file headers:
/// "cos", "gauss", "expbump" or "arctan".
std::string family_name(const VortexFamily& fam);
/// Exponent p of the family, or 0 for the Gaussian.
int family_exponent(const VortexFamily& fam);
bool is_compact(const VortexFamily& fam);

struct VortexSpec {
  VortexFamily family = family::CosPower{1};
  double r0 = 1.0;
  double h0 = 1.0;
  double gamma_amp = 0.0;
  double g = 1.0;
  Vec2 center{};
  Vec2 u_inf{};
};

/// Throws std::invalid_argument naming the offending field when r0, h0 or g
/// is not positive, gamma_amp is negative, p < 1, or the depth at the vortex
/// center is not positive.
void validate(const VortexSpec& spec);

/// Primitive values of the SWE at a point.
struct PointState {
  double h = 0.0;
  double ux = 0.0;
  double uy = 0.0;
};

/// Conserved SWE triple (h, hu, hv).
struct Conserved {
  double h = 0.0;
  double hu = 0.0;
  double hv = 0.0;
};

enum class RadialQuantity { Depth, TangentialVelocity };

/// Radial profile evaluators of a validated vortex.  All members are pure and
/// thread-safe.
class RadialProfile {
 public:
  /// Validates `spec` and caches the family constants.
  explicit RadialProfile(VortexSpec spec);

  const VortexSpec& spec() const { return spec_; }

  double omega(double r) const;
  double u_theta(double r) const { return r * omega(r); }
  double depth(double r) const;

  /// d^k f / dr^k for k in 1..5.  The first derivative of the depth is the
  /// exact balance r omega^2 / g; everything else uses second-order central
  /// differences with step max(r0, 1) * eps^(1 / (k + 2)).  Stencils that
  /// cross r = 0 use the parity of the profile (h even, u_theta odd).
  double derivative(RadialQuantity which, int k, double r) const;

 private:
  double evaluate_signed(RadialQuantity which, double r) const;

  VortexSpec spec_;
  // CosPower: depth = h0 - depth_scale * (H_p(pi/2) - H_p(pi r / (2 r0))).
  double depth_scale_ = 0.0;
  double hp_half_pi_ = 0.0;
};

/// H_p(x) = integral of y cos^{4p}(y) dy, built from the closed form of H_1
/// and the integration-by-parts recursion in p.  The additive constant is
/// that of the closed forms, so H_1(x) = H(2x)/16 + 1/128.
double cos_power_antiderivative(int p, double x);

/// H(x) = 2 cos x + 2 x sin x + cos(2x)/8 + x sin(2x)/4 + 3x^2/4, the
/// antiderivative of x (1 + cos x)^2 used by the p = 1 vortex.
double rb_antiderivative(double x);

/// Amplitude Gamma giving depth(0) == h_min.  Throws std::invalid_argument
/// unless 0 < h_min < h0.
double calibrate_gamma(const VortexFamily& fam, double r0, double h0, double h_min, double g);

// Convenience wrappers that build a RadialProfile on each call.
double omega(const VortexSpec& spec, double r);
double depth(const VortexSpec& spec, double r);

/// Periods of a doubly periodic domain.  Positions relative to the moving
/// vortex center are wrapped to the nearest image, which is the exact periodic
/// solution for compact vortexes with r0 <= min(lx, ly) / 2.
struct Periodic {
  double lx = 1.0;
  double ly = 1.0;
};

/// Exact solution at (x, y, t): the profile translated with u_inf.
PointState eval_cartesian(const RadialProfile& profile, double x, double y, double t);
PointState eval_cartesian(const RadialProfile& profile, double x, double y, double t,
                          const Periodic& period);

struct Cell {
  double x_lo = 0.0;
  double x_hi = 0.0;
  double y_lo = 0.0;
  double y_hi = 0.0;
};

/// Tensor-product Gauss-Legendre approximation (q x q points) of the average
/// of (h, h u_x, h u_y) over `cell` at time t.
Conserved exact_cell_average(const RadialProfile& profile, const Cell& cell, double t,
                             std::size_t q = 4);
Conserved exact_cell_average(const RadialProfile& profile, const Cell& cell, double t,
                             const GaussLegendre& rule,
                             const std::optional<Periodic>& period = std::nullopt);

}  // namespace swvortex
