#pragma once

// Finite-volume solver for the 2D shallow water equations on a uniform,
// doubly periodic Cartesian grid.
//
// Semi-discretization: WENO5 reconstruction in conserved variables, done
// dimension by dimension.  For x-faces, a WENO5 pass along x gives the
// face-line averages on both sides of every face; a second WENO5 pass along y
// turns those into point values at the 4 Gauss-Legendre nodes of the face.
// Rusanov fluxes at the nodes are combined with the Gauss weights.  y-faces
// are treated symmetrically.  Time integration uses an explicit RK scheme
// (RK(6,5) by default) with a CFL-limited step.

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "swvortex/runge_kutta.hpp"
#include "swvortex/vortex.hpp"

namespace swvortex {

/// Uniform periodic grid of nx x ny cells on [x_lo, x_hi] x [y_lo, y_hi].
struct Grid {
  std::size_t nx = 0;
  std::size_t ny = 0;
  double x_lo = 0.0;
  double x_hi = 1.0;
  double y_lo = 0.0;
  double y_hi = 1.0;

  /// Unit square with n x n cells.
  static Grid square(std::size_t n) { return Grid{n, n, 0.0, 1.0, 0.0, 1.0}; }

  double dx() const { return (x_hi - x_lo) / static_cast<double>(nx); }
  double dy() const { return (y_hi - y_lo) / static_cast<double>(ny); }
  std::size_t cells() const { return nx * ny; }
  std::size_t index(std::size_t i, std::size_t j) const { return j * nx + i; }
  Cell cell(std::size_t i, std::size_t j) const;
  Periodic period() const { return Periodic{x_hi - x_lo, y_hi - y_lo}; }

  /// Throws std::invalid_argument unless nx, ny >= 5 and the extent is positive.
  void validate() const;
};

/// Cell averages of (h, hu, hv).  Storage is component-major: q[c * cells + idx].
struct FieldState {
  Grid grid;
  double g = 1.0;
  double time = 0.0;
  std::vector<double> q;

  FieldState() = default;
  FieldState(Grid grid_, double g_, double time_ = 0.0);

  std::span<double> h() { return {q.data(), grid.cells()}; }
  std::span<double> hu() { return {q.data() + grid.cells(), grid.cells()}; }
  std::span<double> hv() { return {q.data() + 2 * grid.cells(), grid.cells()}; }
  std::span<const double> h() const { return {q.data(), grid.cells()}; }
  std::span<const double> hu() const { return {q.data() + grid.cells(), grid.cells()}; }
  std::span<const double> hv() const { return {q.data() + 2 * grid.cells(), grid.cells()}; }

  Conserved at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Conserved& u);

  /// Total mass sum(h) dx dy, summed pairwise.
  double total_mass() const;
};

/// Raised when the run produces a nonpositive or non-finite depth.
class InstabilityError : public std::runtime_error {
 public:
  InstabilityError(const std::string& what, double time, std::size_t i, std::size_t j)
      : std::runtime_error(what), time_(time), i_(i), j_(j) {}
  double time() const { return time_; }
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }

 private:
  double time_;
  std::size_t i_;
  std::size_t j_;
};

/// Reusable semi-discrete operator; owns the reconstruction scratch buffers.
class SweOperator {
 public:
  SweOperator(Grid grid, double g);

  /// dq/dt for the flat state q (component-major, 3 * cells values).
  void operator()(std::span<const double> q, std::span<double> dqdt, double time = 0.0);

  const Grid& grid() const { return grid_; }

 private:
  void x_fluxes(std::span<const double> q, double time);
  void y_fluxes(std::span<const double> q, double time);

  Grid grid_;
  double g_;
  // Face-line averages reconstructed on the low / high side of each cell,
  // component-major like the state.
  std::vector<double> low_;
  std::vector<double> high_;
  // Gauss-averaged flux through the high face of each cell.
  std::vector<double> flux_;
  std::vector<double> dq_;
};

/// Time derivative of all cell averages.
FieldState rhs(const FieldState& state);

/// CFL step  cfl / max((|u| + c)/dx + (|v| + c)/dy),  c = sqrt(g h).
double compute_dt(const FieldState& state, double cfl);

/// One step of size dt with the given tableau.
FieldState rk_step(const FieldState& state, double dt,
                   const ButcherTableau& tableau = ButcherTableau::rk65());

/// Cell averages of the exact vortex at time t (q x q Gauss points per cell).
FieldState initialize(const RadialProfile& profile, const Grid& grid, double t = 0.0,
                      std::size_t q = 4);

struct StepInfo {
  std::size_t step = 0;
  double time = 0.0;
  double dt = 0.0;
};

/// Advances `state` to t_final with CFL-limited steps; the last step lands on
/// t_final exactly.  Throws InstabilityError on a nonpositive or non-finite
/// depth.  `observer`, when set, is called after every step.
void advance(FieldState& state, double t_final, double cfl,
             const ButcherTableau& tableau = ButcherTableau::rk65(),
             const std::function<void(const FieldState&, const StepInfo&)>& observer = {});

/// initialize + advance.
FieldState simulate(const VortexSpec& spec, const Grid& grid, double cfl, double t_final,
                    std::size_t q = 4);

}  // namespace swvortex
