#include "swvortex/vortex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace swvortex {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double ipow(double base, int n) {
  double result = 1.0;
  for (int i = 0; i < n; ++i) result *= base;
  return result;
}

// exp(-1 / b^p) for the C-infinity bumps, with b in (0, 1].
double bump(double b, int p) {
  return std::exp(-1.0 / ipow(b, p));
}

}  // namespace

std::string family_name(const VortexFamily& fam) {
  return std::visit(overloaded{[](const family::CosPower&) { return std::string("cos"); },
                               [](const family::Gaussian&) { return std::string("gauss"); },
                               [](const family::ExpBump&) { return std::string("expbump"); },
                               [](const family::ArctanBump&) { return std::string("arctan"); }},
                    fam);
}

int family_exponent(const VortexFamily& fam) {
  return std::visit(overloaded{[](const family::Gaussian&) { return 0; },
                               [](const auto& f) { return f.p; }},
                    fam);
}

bool is_compact(const VortexFamily& fam) {
  return !std::holds_alternative<family::Gaussian>(fam);
}

double rb_antiderivative(double x) {
  return 2.0 * std::cos(x) + 2.0 * x * std::sin(x) + std::cos(2.0 * x) / 8.0 +
         x * std::sin(2.0 * x) / 4.0 + 12.0 * x * x / 16.0;
}

double cos_power_antiderivative(int p, double x) {
  if (p < 1) {
    throw std::invalid_argument("cos_power_antiderivative: p must be >= 1");
  }
  const double c = std::cos(x);
  const double s = std::sin(x);
  const double c2x = std::cos(2.0 * x);
  const double s2x = std::sin(2.0 * x);
  double value = c2x / 8.0 + x * s2x / 4.0 + c2x * c2x / 64.0 + 3.0 * x * x / 16.0 +
                 x * c2x * s2x / 16.0;
  for (int k = 2; k <= p; ++k) {
    const double n = 4.0 * k;
    const double c_n3 = ipow(c, 4 * k - 3);
    const double c_n2 = c_n3 * c;
    value = (n - 1.0) / n * (n - 3.0) / (n - 2.0) * value +
            x * c_n3 * s / n * ((n - 1.0) / (n - 2.0) + c * c) +
            c_n2 * (c * c / (n * n) + (n - 1.0) / (n * (n - 2.0) * (n - 2.0)));
  }
  return value;
}

double calibrate_gamma(const VortexFamily& fam, double r0, double h0, double h_min, double g) {
  if (!(h_min > 0.0)) {
    throw std::invalid_argument("h_min must be positive");
  }
  if (!(h_min < h0)) {
    throw std::invalid_argument("h_min must be smaller than h0");
  }
  if (!(r0 > 0.0)) throw std::invalid_argument("r0 must be positive");
  if (!(g > 0.0)) throw std::invalid_argument("g must be positive");
  const double drop = h0 - h_min;
  return std::visit(
      overloaded{
          [&](const family::CosPower& f) {
            const double dH = cos_power_antiderivative(f.p, kPi / 2.0) -
                              cos_power_antiderivative(f.p, 0.0);
            return kPi / (std::ldexp(1.0, f.p + 1) * r0) * std::sqrt(g * drop / dH);
          },
          [&](const family::Gaussian&) { return 2.0 / r0 * std::sqrt(g * drop); },
          [&](const family::ExpBump&) { return std::sqrt(drop * std::exp(1.0)); },
          [&](const family::ArctanBump& f) {
            return std::sqrt(drop / bump(std::atan(1.0), f.p));
          }},
      fam);
}

void validate(const VortexSpec& spec) { static_cast<void>(RadialProfile(spec)); }

RadialProfile::RadialProfile(VortexSpec spec) : spec_(spec) {
  if (!(spec_.r0 > 0.0)) throw std::invalid_argument("r0 must be positive");
  if (!(spec_.h0 > 0.0)) throw std::invalid_argument("h0 must be positive");
  if (!(spec_.g > 0.0)) throw std::invalid_argument("g must be positive");
  if (!(spec_.gamma_amp >= 0.0)) {
    throw std::invalid_argument("gamma_amp must be nonnegative");
  }
  if (!std::holds_alternative<family::Gaussian>(spec_.family) &&
      family_exponent(spec_.family) < 1) {
    throw std::invalid_argument("p must be a positive integer");
  }
  if (const auto* f = std::get_if<family::CosPower>(&spec_.family)) {
    const double amp = std::ldexp(1.0, f->p + 1) * spec_.gamma_amp * spec_.r0 / kPi;
    depth_scale_ = amp * amp / spec_.g;
    hp_half_pi_ = cos_power_antiderivative(f->p, kPi / 2.0);
  }
  if (!(depth(0.0) > 0.0)) {
    throw std::invalid_argument("gamma_amp too large: depth at the vortex center is not positive");
  }
}

double RadialProfile::omega(double r) const {
  const double r0 = spec_.r0;
  const double amp = spec_.gamma_amp;
  return std::visit(
      overloaded{
          [&](const family::CosPower& f) {
            if (r >= r0) return 0.0;
            // (1 + cos(pi r / r0)) = 2 cos^2(pi r / (2 r0)); the right-hand
            // form keeps full relative precision near r0.
            const double c = std::cos(kPi * r / (2.0 * r0));
            return amp * ipow(2.0 * c * c, f.p);
          },
          [&](const family::Gaussian&) {
            const double s = r / r0;
            return amp * std::exp(-s * s);
          },
          [&](const family::ExpBump& f) {
            if (r >= r0) return 0.0;
            const double s = 1.0 - (r / r0) * (r / r0);
            const double pp = f.p;
            // Gamma sqrt(2 p g / (r0^2 s^{p+1})) exp(-1 / (2 s^p)), in log
            // form so that s -> 0 gives 0 instead of inf * 0.
            const double log_mag = -0.5 / ipow(s, f.p) - 0.5 * (pp + 1.0) * std::log(s);
            return amp * std::sqrt(2.0 * pp * spec_.g) / r0 * std::exp(log_mag);
          },
          [&](const family::ArctanBump& f) {
            if (r >= r0) return 0.0;
            const double s = 1.0 - (r / r0) * (r / r0);
            const double a = std::atan(s);
            const double pp = f.p;
            const double log_mag = -0.5 / ipow(a, f.p) - 0.5 * (pp + 1.0) * std::log(a);
            return amp * std::sqrt(2.0 * pp * spec_.g / (1.0 + s * s)) / r0 * std::exp(log_mag);
          }},
      spec_.family);
}

double RadialProfile::depth(double r) const {
  const double r0 = spec_.r0;
  const double h0 = spec_.h0;
  const double amp2 = spec_.gamma_amp * spec_.gamma_amp;
  return std::visit(
      overloaded{
          [&](const family::CosPower& f) {
            if (r >= r0) return h0;
            return h0 - depth_scale_ *
                            (hp_half_pi_ - cos_power_antiderivative(f.p, kPi * r / (2.0 * r0)));
          },
          [&](const family::Gaussian&) {
            const double s = r / r0;
            return h0 - amp2 * r0 * r0 / (4.0 * spec_.g) * std::exp(-2.0 * s * s);
          },
          [&](const family::ExpBump& f) {
            if (r >= r0) return h0;
            const double s = 1.0 - (r / r0) * (r / r0);
            return h0 - amp2 * bump(s, f.p);
          },
          [&](const family::ArctanBump& f) {
            if (r >= r0) return h0;
            const double s = 1.0 - (r / r0) * (r / r0);
            return h0 - amp2 * bump(std::atan(s), f.p);
          }},
      spec_.family);
}

double RadialProfile::evaluate_signed(RadialQuantity which, double r) const {
  const double a = std::abs(r);
  if (which == RadialQuantity::Depth) return depth(a);
  return r * omega(a);
}

double RadialProfile::derivative(RadialQuantity which, int k, double r) const {
  if (k < 1 || k > 5) {
    throw std::invalid_argument("derivative order must be in 1..5");
  }
  if (which == RadialQuantity::Depth && k == 1) {
    const double w = omega(std::abs(r));
    return r * w * w / spec_.g;
  }
  const double step = std::max(spec_.r0, 1.0) *
                      std::pow(std::numeric_limits<double>::epsilon(), 1.0 / (k + 2));
  auto f = [&](int j) { return evaluate_signed(which, r + j * step); };
  switch (k) {
    case 1:
      return (f(1) - f(-1)) / (2.0 * step);
    case 2:
      return (f(1) - 2.0 * f(0) + f(-1)) / (step * step);
    case 3:
      return (f(2) - 2.0 * f(1) + 2.0 * f(-1) - f(-2)) / (2.0 * ipow(step, 3));
    case 4:
      return (f(2) - 4.0 * f(1) + 6.0 * f(0) - 4.0 * f(-1) + f(-2)) / ipow(step, 4);
    default:
      return (f(3) - 4.0 * f(2) + 5.0 * f(1) - 5.0 * f(-1) + 4.0 * f(-2) - f(-3)) /
             (2.0 * ipow(step, 5));
  }
}

double omega(const VortexSpec& spec, double r) { return RadialProfile(spec).omega(r); }

double depth(const VortexSpec& spec, double r) { return RadialProfile(spec).depth(r); }

namespace {

PointState eval_offset(const RadialProfile& profile, double zx, double zy) {
  const VortexSpec& spec = profile.spec();
  const double r = std::hypot(zx, zy);
  // u_theta * (-zy/r, zx/r) == omega * (-zy, zx): no division at the center.
  const double w = profile.omega(r);
  return PointState{profile.depth(r), spec.u_inf.x - w * zy, spec.u_inf.y + w * zx};
}

}  // namespace

PointState eval_cartesian(const RadialProfile& profile, double x, double y, double t) {
  const VortexSpec& spec = profile.spec();
  return eval_offset(profile, x - spec.center.x - spec.u_inf.x * t,
                     y - spec.center.y - spec.u_inf.y * t);
}

PointState eval_cartesian(const RadialProfile& profile, double x, double y, double t,
                          const Periodic& period) {
  const VortexSpec& spec = profile.spec();
  double zx = x - spec.center.x - spec.u_inf.x * t;
  double zy = y - spec.center.y - spec.u_inf.y * t;
  zx -= period.lx * std::round(zx / period.lx);
  zy -= period.ly * std::round(zy / period.ly);
  return eval_offset(profile, zx, zy);
}

Conserved exact_cell_average(const RadialProfile& profile, const Cell& cell, double t,
                             const GaussLegendre& rule, const std::optional<Periodic>& period) {
  const double cx = 0.5 * (cell.x_lo + cell.x_hi);
  const double cy = 0.5 * (cell.y_lo + cell.y_hi);
  const double hx = 0.5 * (cell.x_hi - cell.x_lo);
  const double hy = 0.5 * (cell.y_hi - cell.y_lo);
  // Depth is accumulated as a deviation from h0 so that cells outside a
  // compact vortex average to h0 exactly.
  const double h0 = profile.spec().h0;
  Conserved sum;
  for (std::size_t j = 0; j < rule.size(); ++j) {
    const double y = cy + hy * rule.nodes[j];
    Conserved row;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double x = cx + hx * rule.nodes[i];
      const PointState s =
          period ? eval_cartesian(profile, x, y, t, *period) : eval_cartesian(profile, x, y, t);
      row.h += rule.weights[i] * (s.h - h0);
      row.hu += rule.weights[i] * s.h * s.ux;
      row.hv += rule.weights[i] * s.h * s.uy;
    }
    sum.h += rule.weights[j] * row.h;
    sum.hu += rule.weights[j] * row.hu;
    sum.hv += rule.weights[j] * row.hv;
  }
  // Reference weights sum to 2 in each direction.
  return Conserved{h0 + 0.25 * sum.h, 0.25 * sum.hu, 0.25 * sum.hv};
}

Conserved exact_cell_average(const RadialProfile& profile, const Cell& cell, double t,
                             std::size_t q) {
  return exact_cell_average(profile, cell, t, GaussLegendre(q));
}

}  // namespace swvortex
