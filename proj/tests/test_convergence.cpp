#include <cmath>

#include "doctest.h"
#include "swvortex/convergence.hpp"

using namespace swvortex;

namespace {

VortexSpec table_vortex() {
  VortexSpec s;
  s.family = family::CosPower{1};
  s.r0 = 0.25;
  s.gamma_amp = calibrate_gamma(s.family, 0.25, 1.0, 0.99, 1.0);
  s.center = {0.5, 0.5};
  s.u_inf = {1.0, 1.0};
  return s;
}

}  // namespace

TEST_CASE("observed order") {
  CHECK(observed_order(5.794e-8, 7.942e-9, 200, 300) == doctest::Approx(4.901).epsilon(5e-4));
  CHECK(observed_order(4.188e-6, 5.018e-7, 64, 128) == doctest::Approx(3.061).epsilon(5e-4));
  CHECK(observed_order(1.0, 0.25, 10, 20) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(std::isnan(observed_order(0.0, 1e-3, 10, 20)));
  CHECK(std::isnan(observed_order(1e-3, -1.0, 10, 20)));
  CHECK(std::isnan(observed_order(1e-3, 1e-4, 10, 10)));
  CHECK(std::isnan(observed_order(NAN, 1e-4, 10, 20)));
}

TEST_CASE("error norm of the exact initial state is zero") {
  const RadialProfile prof(table_vortex());
  const FieldState s = initialize(prof, Grid::square(16));
  const ErrorTriple e = error_norm(s, prof, 0.0);
  CHECK(e.h == 0.0);
  CHECK(e.u == 0.0);
  CHECK(e.v == 0.0);
  // A uniform perturbation of the depth shows up one to one.
  FieldState p = s;
  for (double& h : p.h()) h += 1e-3;
  CHECK(error_norm(p, prof, 0.0).h == doctest::Approx(1e-3).epsilon(1e-9));
}

TEST_CASE("study bookkeeping") {
  const VortexSpec spec = table_vortex();
  StudyOptions opt;
  opt.t_final = 0.05;

  SUBCASE("mesh list is validated") {
    CHECK_THROWS_AS(run_study(spec, opt), std::invalid_argument);
    opt.meshes = {16, 8};
    CHECK_THROWS_AS(run_study(spec, opt), std::invalid_argument);
    opt.meshes = {8, 8};
    CHECK_THROWS_AS(run_study(spec, opt), std::invalid_argument);
  }
  SUBCASE("single mesh gives one row with zero orders") {
    opt.meshes = {8};
    const ConvergenceReport r = run_study(spec, opt);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].order.h == 0.0);
    CHECK(r.rows[0].order.u == 0.0);
    CHECK(r.rows[0].error.h > 0.0);
    CHECK(format_table(r).find("0.000") != std::string::npos);
  }
  SUBCASE("orders between consecutive meshes and callback per row") {
    opt.meshes = {8, 16, 32};
    int calls = 0;
    const ConvergenceReport r = run_study(spec, opt, [&](const ConvergenceRow&) { ++calls; });
    CHECK(calls == 3);
    REQUIRE(r.rows.size() == 3);
    for (std::size_t k = 1; k < 3; ++k) {
      CHECK(r.rows[k].order.h ==
            doctest::Approx(observed_order(r.rows[k - 1].error.h, r.rows[k].error.h,
                                           r.rows[k - 1].n, r.rows[k].n)));
      CHECK(std::abs(r.rows[k].final_mass - r.rows[k].initial_mass) <=
            1e-12 * r.rows[k].initial_mass);
    }
    const std::string table = format_table(r);
    CHECK(table.find("Error h") != std::string::npos);
    CHECK(table.find("   32") != std::string::npos);
  }
  SUBCASE("an unstable run is recorded and the study continues") {
    VortexSpec deep = spec;
    deep.r0 = 0.3;
    deep.gamma_amp = calibrate_gamma(deep.family, 0.3, 1.0, 1e-6, 1.0);
    opt.meshes = {8, 16};
    opt.cfl = 1.0;
    opt.t_final = 1.0;
    const ConvergenceReport r = run_study(deep, opt);
    REQUIRE(r.rows.size() == 2);
    CHECK_FALSE(r.rows[0].failed);
    CHECK(std::isfinite(r.rows[0].error.h));
    CHECK(r.rows[1].failed);
    CHECK(std::isnan(r.rows[1].error.h));
    CHECK(std::isnan(r.rows[1].order.h));
    CHECK_FALSE(r.rows[1].failure.empty());
    CHECK(format_table(r).find("failed") != std::string::npos);
  }
}

TEST_CASE("standard mesh sequences") {
  CHECK(dyadic_meshes().front() == 8);
  CHECK(dyadic_meshes().back() == 512);
  CHECK(standard_meshes().size() == 8);
  CHECK(standard_meshes()[3] == 200);
}
