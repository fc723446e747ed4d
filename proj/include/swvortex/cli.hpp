#pragma once

// Command-line front end: configuration, the profile / converge / fields
// subcommands, and the CSV format they emit.

#include <array>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "swvortex/convergence.hpp"
#include "swvortex/euler.hpp"
#include "swvortex/vortex.hpp"

namespace swvortex::cli {

/// Version string written into every output header.
std::string tool_version();

enum ExitCode : int { kSuccess = 0, kConfigError = 2, kInstability = 3 };

/// Invalid configuration; the message starts with the offending field name.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SampleMode { Average, Point };

struct RunConfig {
  std::string command;

  std::string family = "cos";
  int p = 1;
  double r0 = 0.45;
  double h0 = 1.0;
  std::optional<double> h_min;      ///< 0.99 when neither h_min nor gamma_amp is set
  std::optional<double> gamma_amp;
  double g = 1.0;
  Vec2 center{0.5, 0.5};
  Vec2 u_inf{1.0, 1.0};

  std::vector<std::size_t> meshes;  ///< --N gives a one-element list
  std::array<double, 4> domain{0.0, 1.0, 0.0, 1.0};  ///< x_lo, x_hi, y_lo, y_hi
  double cfl = 0.95;
  double t_final = 1.0;
  std::size_t quadrature = 4;

  std::optional<std::string> euler;  ///< "isentropic" or "isochoric"
  double gas_gamma = 1.4;
  double rho0 = 1.0;
  double p0 = 1.0;

  std::string out;                   ///< empty: standard output
  bool full_precision = false;

  std::size_t samples = 2001;        ///< profile
  std::optional<double> r_max;       ///< profile; default max(2 r0, 1)
  SampleMode sample = SampleMode::Average;  ///< fields
  double time = 0.0;                 ///< fields
};

/// Parses argv (flags override values from --config FILE).  Returns nullopt
/// when help or version output was requested and printed to `out`.  Throws
/// ConfigError on any invalid input.
std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out);

/// Range checks on every field; throws ConfigError naming the field.
void validate_config(const RunConfig& config);

VortexFamily make_family(const std::string& name, int p);
/// Builds the vortex, calibrating gamma_amp from h_min when needed.
VortexSpec make_vortex_spec(const RunConfig& config);
EulerParams make_euler_params(const RunConfig& config);

/// All parameters as (key, value) pairs, in the key = value syntax accepted
/// by --config.  The subcommand itself is not included.
std::vector<std::pair<std::string, std::string>> config_echo(const RunConfig& config);

// ---------------------------------------------------------------------------
// CSV

enum class NumberStyle { Shortest, Scientific, Fixed };

struct ColumnFormat {
  NumberStyle style = NumberStyle::Shortest;
  int digits = 0;  ///< digits after the decimal point for Scientific / Fixed
};

// Layout of an emitted file:
//   ## free-text note lines (tool version, summaries)
//   # key = value            (configuration echo)
//   column,names
//   rows...
// Stripping the leading "# " from the metadata lines gives a file usable with
// --config; the "##" lines then read as comments.
struct CsvTable {
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::size_t column(const std::string& name) const;  ///< throws std::out_of_range
  std::map<std::string, std::string> metadata_map() const;
};

/// Shortest decimal text that parses back to exactly `v`; "nan", "inf", "-inf"
/// for non-finite values.
std::string format_number(double v, ColumnFormat format = {});

/// Writes notes, metadata, header and rows.  `formats` may be empty
/// (Shortest everywhere) or hold one entry per column.
void write_csv(std::ostream& os, const CsvTable& table,
               const std::vector<ColumnFormat>& formats = {});
/// Reads the format written by write_csv; comment lines may appear anywhere.
CsvTable read_csv(std::istream& is);

// ---------------------------------------------------------------------------
// Subcommands.  Each writes its CSV to `out`; `table` receives the aligned
// text rendering where one exists.

CsvTable profile_table(const RunConfig& config);
CsvTable fields_table(const RunConfig& config);
CsvTable converge_table(const RunConfig& config, const ConvergenceReport& report);

int cmd_profile(const RunConfig& config, std::ostream& out);
int cmd_converge(const RunConfig& config, std::ostream& out, std::ostream& table,
                 std::ostream& log);
int cmd_fields(const RunConfig& config, std::ostream& out);

/// Full entry point: parse, validate, dispatch, map errors to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace swvortex::cli
