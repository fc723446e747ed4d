#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "swvortex/vortex.hpp"

namespace swvortex {

enum class Axis { X, Y };

/// Physical SWE flux of the conserved triple along `axis`, including the
/// hydrostatic pressure g h^2 / 2 in the normal momentum component.
inline Conserved physical_flux(const Conserved& u, Axis axis, double g) {
  const double p = 0.5 * g * u.h * u.h;
  if (axis == Axis::X) {
    const double vx = u.hu / u.h;
    return Conserved{u.hu, u.hu * vx + p, u.hv * vx};
  }
  const double vy = u.hv / u.h;
  return Conserved{u.hv, u.hu * vy, u.hv * vy + p};
}

/// Rusanov (local Lax-Friedrichs) flux
///   F* = (F(uL) + F(uR)) / 2 - lambda / 2 (uR - uL),
///   lambda = max(|u_n| + sqrt(g h)) over both states.
/// Throws std::domain_error when either depth is not positive.
inline Conserved rusanov_flux(const Conserved& ul, const Conserved& ur, Axis axis, double g) {
  if (!(ul.h > 0.0) || !(ur.h > 0.0)) {
    throw std::domain_error("rusanov_flux: nonpositive depth");
  }
  const double unl = (axis == Axis::X ? ul.hu : ul.hv) / ul.h;
  const double unr = (axis == Axis::X ? ur.hu : ur.hv) / ur.h;
  const double lambda =
      std::max(std::abs(unl) + std::sqrt(g * ul.h), std::abs(unr) + std::sqrt(g * ur.h));
  const Conserved fl = physical_flux(ul, axis, g);
  const Conserved fr = physical_flux(ur, axis, g);
  return Conserved{0.5 * (fl.h + fr.h) - 0.5 * lambda * (ur.h - ul.h),
                   0.5 * (fl.hu + fr.hu) - 0.5 * lambda * (ur.hu - ul.hu),
                   0.5 * (fl.hv + fr.hv) - 0.5 * lambda * (ur.hv - ul.hv)};
}

}  // namespace swvortex
