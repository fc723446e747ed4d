#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>

#include "swvortex/cli.hpp"
#include "swvortex/quadrature.hpp"
#include "swvortex/solver.hpp"

namespace swvortex::cli {

namespace {

constexpr int kDerivatives = 5;

std::vector<std::string> header_notes(const RunConfig& config, const VortexSpec& spec) {
  return {"swvortex " + tool_version() + " " + config.command,
          "gamma_amp (resolved) = " + format_number(spec.gamma_amp)};
}

std::vector<ColumnFormat> uniform_formats(const RunConfig& config, std::size_t n) {
  const ColumnFormat f = config.full_precision ? ColumnFormat{}
                                               : ColumnFormat{NumberStyle::Scientific, 10};
  return std::vector<ColumnFormat>(n, f);
}

Grid make_grid(const RunConfig& config, std::size_t n) {
  return Grid{n, n, config.domain[0], config.domain[1], config.domain[2], config.domain[3]};
}

}  // namespace

CsvTable profile_table(const RunConfig& config) {
  const VortexSpec spec = make_vortex_spec(config);
  const RadialProfile profile(spec);
  CsvTable table;
  table.notes = header_notes(config, spec);
  table.metadata = config_echo(config);
  table.columns = {"r", "h", "u_theta"};
  for (int k = 1; k <= kDerivatives; ++k) table.columns.push_back("dh" + std::to_string(k));
  for (int k = 1; k <= kDerivatives; ++k) table.columns.push_back("du" + std::to_string(k));

  const double r_max = config.r_max.value_or(std::max(2.0 * config.r0, 1.0));
  const auto row_at = [&](double r) {
    std::vector<double> row{r, profile.depth(r), profile.u_theta(r)};
    for (int k = 1; k <= kDerivatives; ++k) {
      row.push_back(profile.derivative(RadialQuantity::Depth, k, r));
    }
    for (int k = 1; k <= kDerivatives; ++k) {
      row.push_back(profile.derivative(RadialQuantity::TangentialVelocity, k, r));
    }
    return row;
  };

  const std::size_t n = config.samples;
  std::vector<double> max_abs(table.columns.size(), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = r_max * static_cast<double>(i) / static_cast<double>(n - 1);
    auto row = row_at(r);
    for (std::size_t k = 1; k < row.size(); ++k) max_abs[k] = std::max(max_abs[k], std::abs(row[k]));
    table.rows.push_back(std::move(row));
  }

  std::string maxima = "max_abs:";
  for (std::size_t k = 1; k < table.columns.size(); ++k) {
    maxima += " " + table.columns[k] + "=" + format_number(max_abs[k]);
  }
  const auto at_one = row_at(1.0);
  std::string boundary = "at_r=1:";
  for (std::size_t k = 1; k < table.columns.size(); ++k) {
    boundary += " " + table.columns[k] + "=" + format_number(at_one[k]);
  }
  table.notes.push_back(maxima);
  table.notes.push_back(boundary);
  return table;
}

CsvTable fields_table(const RunConfig& config) {
  const VortexSpec spec = make_vortex_spec(config);
  const RadialProfile profile(spec);
  const Grid grid = make_grid(config, config.meshes.front());
  grid.validate();
  const Periodic period = grid.period();
  const GaussLegendre rule(config.quadrature);
  const bool average = config.sample == SampleMode::Average;

  CsvTable table;
  table.notes = header_notes(config, spec);
  table.metadata = config_echo(config);

  if (config.euler) {
    const EulerVortexField field(spec, make_euler_params(config));
    table.columns = {"x", "y", "rho", "rho_u", "rho_v", "rho_E"};
    for (std::size_t j = 0; j < grid.ny; ++j) {
      for (std::size_t i = 0; i < grid.nx; ++i) {
        const Cell c = grid.cell(i, j);
        const double x = 0.5 * (c.x_lo + c.x_hi);
        const double y = 0.5 * (c.y_lo + c.y_hi);
        const EulerConserved u = average ? euler_cell_average(field, c, config.time, rule, period)
                                         : eval_euler_cartesian(field, x, y, config.time, period);
        table.rows.push_back({x, y, u.rho, u.rho_u, u.rho_v, u.rho_e});
      }
    }
  } else {
    table.columns = {"x", "y", "h", "hu", "hv"};
    for (std::size_t j = 0; j < grid.ny; ++j) {
      for (std::size_t i = 0; i < grid.nx; ++i) {
        const Cell c = grid.cell(i, j);
        const double x = 0.5 * (c.x_lo + c.x_hi);
        const double y = 0.5 * (c.y_lo + c.y_hi);
        Conserved u;
        if (average) {
          u = exact_cell_average(profile, c, config.time, rule, period);
        } else {
          const PointState s = eval_cartesian(profile, x, y, config.time, period);
          u = Conserved{s.h, s.h * s.ux, s.h * s.uy};
        }
        table.rows.push_back({x, y, u.h, u.hu, u.hv});
      }
    }
  }
  return table;
}

CsvTable converge_table(const RunConfig& config, const ConvergenceReport& report) {
  CsvTable table;
  table.notes = header_notes(config, report.spec);
  table.notes.push_back("norm: " + report.norm);
  table.metadata = config_echo(config);
  table.columns = {"N", "err_h", "ord_h", "err_u", "ord_u", "err_v", "ord_v", "mass_drift",
                   "failed"};
  for (const auto& row : report.rows) {
    const double drift = row.failed ? std::nan("")
                                    : std::abs(row.final_mass - row.initial_mass) /
                                          std::abs(row.initial_mass);
    table.rows.push_back({static_cast<double>(row.n), row.error.h, row.order.h, row.error.u,
                          row.order.u, row.error.v, row.order.v, drift,
                          row.failed ? 1.0 : 0.0});
    if (row.failed) table.notes.push_back("N=" + std::to_string(row.n) + " failed: " + row.failure);
  }
  return table;
}

int cmd_profile(const RunConfig& config, std::ostream& out) {
  const CsvTable table = profile_table(config);
  write_csv(out, table, uniform_formats(config, table.columns.size()));
  return kSuccess;
}

int cmd_fields(const RunConfig& config, std::ostream& out) {
  const CsvTable table = fields_table(config);
  write_csv(out, table, uniform_formats(config, table.columns.size()));
  return kSuccess;
}

int cmd_converge(const RunConfig& config, std::ostream& out, std::ostream& table_out,
                 std::ostream& log) {
  const VortexSpec spec = make_vortex_spec(config);
  StudyOptions options;
  options.meshes = config.meshes;
  options.cfl = config.cfl;
  options.t_final = config.t_final;
  options.quadrature = config.quadrature;
  options.x_lo = config.domain[0];
  options.x_hi = config.domain[1];
  options.y_lo = config.domain[2];
  options.y_hi = config.domain[3];

  const ConvergenceReport report = run_study(spec, options, [&](const ConvergenceRow& row) {
    log << "N=" << row.n << (row.failed ? " failed: " + row.failure : " done") << std::endl;
  });
  const CsvTable table = converge_table(config, report);

  std::vector<ColumnFormat> formats;
  if (config.full_precision) {
    formats.assign(table.columns.size(), ColumnFormat{});
  } else {
    const ColumnFormat sci{NumberStyle::Scientific, 3};
    const ColumnFormat ord{NumberStyle::Fixed, 3};
    const ColumnFormat whole{NumberStyle::Fixed, 0};
    formats = {whole, sci, ord, sci, ord, sci, ord, sci, whole};
  }
  write_csv(out, table, formats);
  table_out << format_table(report);

  const bool any_failed =
      std::any_of(report.rows.begin(), report.rows.end(), [](const auto& r) { return r.failed; });
  return any_failed ? kInstability : kSuccess;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const auto parsed = parse_command_line(argc, argv, out);
    if (!parsed) return kSuccess;
    const RunConfig& config = *parsed;
    validate_config(config);

    std::ofstream file;
    if (!config.out.empty()) {
      file.open(config.out);
      if (!file) throw ConfigError("out: cannot open '" + config.out + "' for writing");
    }
    std::ostream& csv = config.out.empty() ? out : file;

    if (config.command == "profile") return cmd_profile(config, csv);
    if (config.command == "fields") return cmd_fields(config, csv);
    // With the CSV on standard output the aligned table goes to the log stream.
    return cmd_converge(config, csv, config.out.empty() ? err : out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const InstabilityError& e) {
    err << "error: " << e.what() << '\n';
    return kInstability;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace swvortex::cli
