#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace swvortex {

/// Gauss-Legendre rule on the reference interval [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;

  /// Builds the n-point rule (n >= 1) by Newton iteration on P_n.
  explicit GaussLegendre(std::size_t n);

  std::size_t size() const { return nodes.size(); }

  /// Integral of f over [a, b].
  double integrate(const std::function<double(double)>& f, double a, double b) const;
};

/// Composite rule: `panels` equal sub-intervals of [a, b], each with `rule`.
double composite_integrate(const GaussLegendre& rule, std::size_t panels,
                           const std::function<double(double)>& f, double a, double b);

}  // namespace swvortex
