#include <cmath>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "swvortex/cli.hpp"

namespace swvortex::cli {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ", ";
    s += parts[i];
  }
  return s + "]";
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

std::string tool_version() { return SWVORTEX_VERSION; }

std::optional<RunConfig> parse_command_line(int argc, const char* const* argv,
                                            std::ostream& out) {
  RunConfig c;
  CLI::App app{"Exact shallow water vortexes: profiles, convergence studies, field export",
               "swvortex"};
  app.set_config("--config", "", "key = value file; command-line flags take precedence");
  app.allow_config_extras(false);
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  app.add_option("--family", c.family, "Vortex family")
      ->check(CLI::IsMember({"cos", "gauss", "expbump", "arctan"}))
      ->capture_default_str();
  app.add_option("--p", c.p, "Family exponent (ignored for gauss)")->capture_default_str();
  app.add_option("--r0", c.r0, "Vortex radius or width")->capture_default_str();
  app.add_option("--h0", c.h0, "Far-field depth")->capture_default_str();
  auto* hmin = app.add_option("--hmin", c.h_min, "Depth at the vortex center (default 0.99)");
  auto* amp = app.add_option("--gamma-amp", c.gamma_amp, "Amplitude Gamma");
  hmin->excludes(amp);
  app.add_option("--g", c.g, "Gravity")->capture_default_str();

  std::vector<double> center{c.center.x, c.center.y};
  std::vector<double> uinf{c.u_inf.x, c.u_inf.y};
  std::vector<double> domain(c.domain.begin(), c.domain.end());
  app.add_option("--center", center, "Vortex center at t = 0: X,Y")
      ->delimiter(',')
      ->expected(2)
      ->capture_default_str();
  app.add_option("--uinf", uinf, "Background velocity: X,Y")
      ->delimiter(',')
      ->expected(2)
      ->capture_default_str();
  app.add_option("--domain", domain, "Periodic domain: XLO,XHI,YLO,YHI")
      ->delimiter(',')
      ->expected(4)
      ->capture_default_str();

  std::optional<std::size_t> single_n;
  auto* n_opt = app.add_option("--N", single_n, "Cells per direction");
  auto* meshes = app.add_option("--meshes", c.meshes, "Comma-separated mesh sizes")
                     ->delimiter(',');
  n_opt->excludes(meshes);
  app.add_option("--cfl", c.cfl, "CFL number")->capture_default_str();
  app.add_option("--tfinal", c.t_final, "Final time of each run")->capture_default_str();
  app.add_option("--quad", c.quadrature, "Gauss points per direction for cell averages")
      ->capture_default_str();

  std::string euler;
  app.add_option("--euler", euler, "Export the Euler vortex instead of the SWE one")
      ->check(CLI::IsMember({"isentropic", "isochoric"}));
  app.add_option("--gas-gamma", c.gas_gamma, "Adiabatic exponent")->capture_default_str();
  app.add_option("--rho0", c.rho0, "Euler reference density")->capture_default_str();
  app.add_option("--p0", c.p0, "Euler far-field pressure (isochoric)")->capture_default_str();

  app.add_option("--out", c.out, "Output CSV path (default standard output)");
  app.add_flag("--full-precision", c.full_precision,
               "Shortest round-trip decimal for every number");

  app.add_option("--samples", c.samples, "Radial samples (profile)")->capture_default_str();
  app.add_option("--rmax", c.r_max, "Radial sampling extent (profile; default max(2 r0, 1))");
  std::string sample = "average";
  app.add_option("--sample", sample, "Cell averages or cell-center values (fields)")
      ->check(CLI::IsMember({"average", "point"}))
      ->capture_default_str();
  app.add_option("--time", c.time, "Evaluation time (fields)")->capture_default_str();

  for (const char* name : {"profile", "converge", "fields"}) {
    app.add_subcommand(name)->fallthrough();
  }
  app.get_subcommand("profile")->description("Radial profile and derivatives up to order 5");
  app.get_subcommand("converge")->description("Mesh convergence study");
  app.get_subcommand("fields")->description("Exact conserved fields on a grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::CallForVersion&) {
    out << tool_version() << '\n';
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  c.command = app.get_subcommands().front()->get_name();
  c.center = Vec2{center[0], center[1]};
  c.u_inf = Vec2{uinf[0], uinf[1]};
  for (std::size_t k = 0; k < 4; ++k) c.domain[k] = domain[k];
  if (single_n) c.meshes = {*single_n};
  if (!euler.empty()) c.euler = euler;
  c.sample = sample == "point" ? SampleMode::Point : SampleMode::Average;
  if (c.meshes.empty()) {
    c.meshes = c.command == "converge" ? std::vector<std::size_t>{8, 16, 32, 64, 128}
                                       : std::vector<std::size_t>{64};
  }
  return c;
}

void validate_config(const RunConfig& c) {
  require(c.family == "cos" || c.family == "gauss" || c.family == "expbump" ||
              c.family == "arctan",
          "family: unknown family '" + c.family + "'");
  require(c.family == "gauss" || c.p >= 1, "p: must be at least 1");
  require(positive(c.r0), "r0: must be positive");
  require(positive(c.h0), "h0: must be positive");
  require(positive(c.g), "g: must be positive");
  require(!(c.h_min && c.gamma_amp), "hmin: mutually exclusive with gamma-amp");
  if (c.h_min) {
    require(std::isfinite(*c.h_min) && *c.h_min > 0.0 && *c.h_min < c.h0,
            "hmin: must satisfy 0 < hmin < h0");
  }
  if (c.gamma_amp) {
    require(std::isfinite(*c.gamma_amp) && *c.gamma_amp >= 0.0,
            "gamma-amp: must be nonnegative");
  }
  require(std::isfinite(c.center.x) && std::isfinite(c.center.y), "center: must be finite");
  require(std::isfinite(c.u_inf.x) && std::isfinite(c.u_inf.y), "uinf: must be finite");
  require(std::isfinite(c.domain[0]) && std::isfinite(c.domain[1]) && c.domain[1] > c.domain[0],
          "domain: need XLO < XHI");
  require(std::isfinite(c.domain[2]) && std::isfinite(c.domain[3]) && c.domain[3] > c.domain[2],
          "domain: need YLO < YHI");
  require(!c.meshes.empty(), "meshes: list is empty");
  for (std::size_t k = 0; k < c.meshes.size(); ++k) {
    require(c.meshes[k] >= 5, "meshes: every mesh needs at least 5 cells");
    require(k == 0 || c.meshes[k] > c.meshes[k - 1], "meshes: list must be strictly increasing");
  }
  require(c.command != "fields" || c.meshes.size() == 1, "N: fields takes a single mesh size");
  require(std::isfinite(c.cfl) && c.cfl > 0.0 && c.cfl <= 1.0, "cfl: must lie in (0, 1]");
  require(std::isfinite(c.t_final) && c.t_final >= 0.0, "tfinal: must be nonnegative");
  require(c.quadrature >= 1 && c.quadrature <= 64, "quad: must lie in [1, 64]");
  require(positive(c.gas_gamma) && c.gas_gamma > 1.0, "gas-gamma: must exceed 1");
  require(positive(c.rho0), "rho0: must be positive");
  require(std::isfinite(c.p0), "p0: must be finite");
  require(c.samples >= 2, "samples: need at least 2");
  if (c.r_max) require(positive(*c.r_max), "rmax: must be positive");
  require(std::isfinite(c.time), "time: must be finite");

  // Family-dependent checks (center depth, etc.) live in the vortex module.
  try {
    (void)make_vortex_spec(c);
    if (c.euler) (void)EulerVortexField(make_vortex_spec(c), make_euler_params(c));
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

VortexFamily make_family(const std::string& name, int p) {
  if (name == "cos") return family::CosPower{p};
  if (name == "gauss") return family::Gaussian{};
  if (name == "expbump") return family::ExpBump{p};
  if (name == "arctan") return family::ArctanBump{p};
  throw ConfigError("family: unknown family '" + name + "'");
}

VortexSpec make_vortex_spec(const RunConfig& c) {
  VortexSpec spec;
  spec.family = make_family(c.family, c.p);
  spec.r0 = c.r0;
  spec.h0 = c.h0;
  spec.g = c.g;
  spec.center = c.center;
  spec.u_inf = c.u_inf;
  if (c.gamma_amp) {
    spec.gamma_amp = *c.gamma_amp;
  } else {
    spec.gamma_amp = calibrate_gamma(spec.family, c.r0, c.h0, c.h_min.value_or(0.99), c.g);
  }
  validate(spec);
  return spec;
}

EulerParams make_euler_params(const RunConfig& c) {
  EulerParams params;
  params.kind = c.euler && *c.euler == "isochoric" ? EulerKind::Isochoric : EulerKind::Isentropic;
  params.gamma_gas = c.gas_gamma;
  params.rho0 = c.rho0;
  params.p0 = c.p0;
  return params;
}

std::vector<std::pair<std::string, std::string>> config_echo(const RunConfig& c) {
  const auto num = [](double v) { return format_number(v); };
  const auto count = [](std::size_t v) { return std::to_string(v); };
  std::vector<std::string> meshes;
  for (std::size_t n : c.meshes) meshes.push_back(count(n));
  std::vector<std::pair<std::string, std::string>> kv = {
      {"family", quoted(c.family)},
      {"p", std::to_string(c.p)},
      {"r0", num(c.r0)},
      {"h0", num(c.h0)},
  };
  if (c.gamma_amp) {
    kv.emplace_back("gamma-amp", num(*c.gamma_amp));
  } else {
    kv.emplace_back("hmin", num(c.h_min.value_or(0.99)));
  }
  kv.emplace_back("g", num(c.g));
  kv.emplace_back("center", join({num(c.center.x), num(c.center.y)}));
  kv.emplace_back("uinf", join({num(c.u_inf.x), num(c.u_inf.y)}));
  kv.emplace_back("domain",
                  join({num(c.domain[0]), num(c.domain[1]), num(c.domain[2]), num(c.domain[3])}));
  kv.emplace_back("meshes", join(meshes));
  kv.emplace_back("cfl", num(c.cfl));
  kv.emplace_back("tfinal", num(c.t_final));
  kv.emplace_back("quad", count(c.quadrature));
  if (c.euler) kv.emplace_back("euler", quoted(*c.euler));
  kv.emplace_back("gas-gamma", num(c.gas_gamma));
  kv.emplace_back("rho0", num(c.rho0));
  kv.emplace_back("p0", num(c.p0));
  kv.emplace_back("full-precision", c.full_precision ? "true" : "false");
  kv.emplace_back("samples", count(c.samples));
  if (c.r_max) kv.emplace_back("rmax", num(*c.r_max));
  kv.emplace_back("sample", quoted(c.sample == SampleMode::Point ? "point" : "average"));
  kv.emplace_back("time", num(c.time));
  return kv;
}

}  // namespace swvortex::cli
