#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "swvortex/solver.hpp"
#include "swvortex/vortex.hpp"

namespace swvortex {

struct ErrorTriple {
  double h = 0.0;
  double u = 0.0;
  double v = 0.0;
};

/// Discrete L1 error (1 / (nx ny)) sum |numeric - exact| against the exact
/// cell averages at time t.  Velocities are compared as primitives
/// hu / h on both sides.
ErrorTriple error_norm(const FieldState& numeric, const RadialProfile& profile, double t,
                       std::size_t q = 4);

/// log(e_coarse / e_fine) / log(n_fine / n_coarse); NaN unless all inputs
/// are positive and finite.
double observed_order(double e_coarse, double e_fine, double n_coarse, double n_fine);

struct ConvergenceRow {
  std::size_t n = 0;
  ErrorTriple error;
  ErrorTriple order;  ///< 0 on the first row, NaN when undefined
  bool failed = false;
  std::string failure;
  double initial_mass = 0.0;
  double final_mass = 0.0;
};

struct StudyOptions {
  std::vector<std::size_t> meshes;
  double cfl = 0.95;
  double t_final = 1.0;
  std::size_t quadrature = 4;
  /// Domain of each n x n grid.
  double x_lo = 0.0;
  double x_hi = 1.0;
  double y_lo = 0.0;
  double y_hi = 1.0;
};

struct ConvergenceReport {
  VortexSpec spec;
  StudyOptions options;
  std::string norm = "L1 of cell averages (velocities as primitives)";
  std::vector<ConvergenceRow> rows;
};

/// Called after each mesh finishes (progress reporting).
using RowCallback = std::function<void(const ConvergenceRow&)>;

/// simulate + error_norm per mesh; orders between consecutive successful rows.
/// Throws std::invalid_argument if the mesh list is empty or not strictly
/// increasing.  A solver instability marks the row failed and the study
/// continues with the next mesh.
ConvergenceReport run_study(const VortexSpec& spec, const StudyOptions& options,
                            const RowCallback& on_row = {});

/// Plain-text table laid out like the published convergence tables.
std::string format_table(const ConvergenceReport& report);

/// Dyadic meshes 8..512 and the 25..600 sequence.
std::vector<std::size_t> dyadic_meshes();
std::vector<std::size_t> standard_meshes();

}  // namespace swvortex
