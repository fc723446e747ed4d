#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace swvortex {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Explicit Runge-Kutta scheme.  Coefficients are kept as exact fractions so
/// the consistency identities can be checked without rounding.
struct ButcherTableau {
  std::string name;
  std::size_t stages = 0;
  std::vector<std::vector<Rational>> a;  ///< strictly lower triangular, stages x stages
  std::vector<Rational> b;
  std::vector<Rational> c;

  /// Butcher's six-stage fifth-order method.
  static ButcherTableau rk65();
  /// Classical four-stage method (used by tests as a reference).
  static ButcherTableau rk4();
};

/// Scratch space for the stage derivatives.
class RkWorkspace {
 public:
  void resize(std::size_t stages, std::size_t n);
  std::span<double> stage(std::size_t i) { return {k_.data() + i * n_, n_}; }
  std::span<double> temp() { return temp_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> k_;
  std::vector<double> temp_;
};

/// One explicit RK step of size dt, in place:
///   k_i = f(t + c_i dt, y + dt sum_j a_ij k_j),  y <- y + dt sum_i b_i k_i.
/// `rhs(t, y, dydt)` must fill dydt (same length as y).
template <class Rhs>
void rk_step(const ButcherTableau& tab, std::span<double> y, double t, double dt, Rhs&& rhs,
             RkWorkspace& ws) {
  const std::size_t n = y.size();
  ws.resize(tab.stages, n);
  auto tmp = ws.temp();
  for (std::size_t i = 0; i < tab.stages; ++i) {
    for (std::size_t m = 0; m < n; ++m) tmp[m] = y[m];
    for (std::size_t j = 0; j < i; ++j) {
      const double aij = tab.a[i][j].value();
      if (aij == 0.0) continue;
      const auto kj = ws.stage(j);
      for (std::size_t m = 0; m < n; ++m) tmp[m] += dt * aij * kj[m];
    }
    rhs(t + tab.c[i].value() * dt, std::span<const double>(tmp.data(), n), ws.stage(i));
  }
  for (std::size_t i = 0; i < tab.stages; ++i) {
    const double bi = tab.b[i].value();
    if (bi == 0.0) continue;
    const auto ki = ws.stage(i);
    for (std::size_t m = 0; m < n; ++m) y[m] += dt * bi * ki[m];
  }
}

}  // namespace swvortex
