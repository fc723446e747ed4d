#include "swvortex/convergence.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "swvortex/quadrature.hpp"

namespace swvortex {

ErrorTriple error_norm(const FieldState& numeric, const RadialProfile& profile, double t,
                       std::size_t q) {
  const Grid& grid = numeric.grid;
  const GaussLegendre rule(q);
  ErrorTriple sum;
  for (std::size_t j = 0; j < grid.ny; ++j) {
    for (std::size_t i = 0; i < grid.nx; ++i) {
      const Conserved exact = exact_cell_average(profile, grid.cell(i, j), t, rule, grid.period());
      const Conserved num = numeric.at(i, j);
      sum.h += std::abs(num.h - exact.h);
      sum.u += std::abs(num.hu / num.h - exact.hu / exact.h);
      sum.v += std::abs(num.hv / num.h - exact.hv / exact.h);
    }
  }
  const double inv = 1.0 / static_cast<double>(grid.cells());
  return ErrorTriple{sum.h * inv, sum.u * inv, sum.v * inv};
}

double observed_order(double e_coarse, double e_fine, double n_coarse, double n_fine) {
  const bool valid = e_coarse > 0.0 && e_fine > 0.0 && n_coarse > 0.0 && n_fine > 0.0 &&
                     std::isfinite(e_coarse) && std::isfinite(e_fine) && n_fine != n_coarse;
  if (!valid) return std::numeric_limits<double>::quiet_NaN();
  return std::log(e_coarse / e_fine) / std::log(n_fine / n_coarse);
}

ConvergenceReport run_study(const VortexSpec& spec, const StudyOptions& options,
                            const RowCallback& on_row) {
  if (options.meshes.empty()) {
    throw std::invalid_argument("meshes: list is empty");
  }
  for (std::size_t k = 1; k < options.meshes.size(); ++k) {
    if (options.meshes[k] <= options.meshes[k - 1]) {
      throw std::invalid_argument("meshes: list must be strictly increasing");
    }
  }
  const RadialProfile profile(spec);
  ConvergenceReport report;
  report.spec = spec;
  report.options = options;

  for (std::size_t n : options.meshes) {
    ConvergenceRow row;
    row.n = n;
    const Grid grid{n, n, options.x_lo, options.x_hi, options.y_lo, options.y_hi};
    try {
      FieldState state = initialize(profile, grid, 0.0, options.quadrature);
      row.initial_mass = state.total_mass();
      advance(state, options.t_final, options.cfl);
      row.final_mass = state.total_mass();
      row.error = error_norm(state, profile, options.t_final, options.quadrature);
    } catch (const InstabilityError& e) {
      row.failed = true;
      row.failure = e.what();
      const double nan = std::numeric_limits<double>::quiet_NaN();
      row.error = ErrorTriple{nan, nan, nan};
    }
    if (report.rows.empty()) {
      row.order = ErrorTriple{0.0, 0.0, 0.0};
    } else {
      const ConvergenceRow& prev = report.rows.back();
      const double nc = static_cast<double>(prev.n);
      const double nf = static_cast<double>(n);
      row.order = ErrorTriple{observed_order(prev.error.h, row.error.h, nc, nf),
                              observed_order(prev.error.u, row.error.u, nc, nf),
                              observed_order(prev.error.v, row.error.v, nc, nf)};
    }
    report.rows.push_back(row);
    if (on_row) on_row(report.rows.back());
  }
  return report;
}

std::string format_table(const ConvergenceReport& report) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%5s  %11s  %8s  %11s  %8s  %11s  %8s\n", "N", "Error h",
                "Order h", "Error u", "Order u", "Error v", "Order v");
  out += line;
  for (const auto& row : report.rows) {
    std::snprintf(line, sizeof line, "%5zu  %11.3e  %8.3f  %11.3e  %8.3f  %11.3e  %8.3f%s\n",
                  row.n, row.error.h, row.order.h, row.error.u, row.order.u, row.error.v,
                  row.order.v, row.failed ? "  (failed)" : "");
    out += line;
  }
  return out;
}

std::vector<std::size_t> dyadic_meshes() { return {8, 16, 32, 64, 128, 256, 512}; }

std::vector<std::size_t> standard_meshes() { return {25, 50, 100, 200, 300, 400, 500, 600}; }

}  // namespace swvortex
