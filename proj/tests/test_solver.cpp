#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "swvortex/rusanov.hpp"
#include "swvortex/solver.hpp"

using namespace swvortex;
using std::numbers::pi;

namespace {

VortexSpec cos_vortex(int p, double r0, Vec2 u_inf = {0.0, 0.0}, double g = 1.0) {
  VortexSpec s;
  s.family = family::CosPower{p};
  s.r0 = r0;
  s.g = g;
  s.gamma_amp = calibrate_gamma(s.family, r0, 1.0, 0.99, g);
  s.center = {0.5, 0.5};
  s.u_inf = u_inf;
  return s;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Textbook 1D WENO5-JS (eps = 1e-6, power 2) value at the right face of the
// central cell of a, b, c, d, e.
double weno_right(double a, double b, double c, double d, double e) {
  const double b0 = 13.0 / 12 * std::pow(a - 2 * b + c, 2) + 0.25 * std::pow(a - 4 * b + 3 * c, 2);
  const double b1 = 13.0 / 12 * std::pow(b - 2 * c + d, 2) + 0.25 * std::pow(b - d, 2);
  const double b2 = 13.0 / 12 * std::pow(c - 2 * d + e, 2) + 0.25 * std::pow(3 * c - 4 * d + e, 2);
  const double a0 = 0.1 / std::pow(1e-6 + b0, 2);
  const double a1 = 0.6 / std::pow(1e-6 + b1, 2);
  const double a2 = 0.3 / std::pow(1e-6 + b2, 2);
  const double p0 = (2 * a - 7 * b + 11 * c) / 6;
  const double p1 = (-b + 5 * c + 2 * d) / 6;
  const double p2 = (2 * c + 5 * d - e) / 6;
  return (a0 * p0 + a1 * p1 + a2 * p2) / (a0 + a1 + a2);
}

}  // namespace

TEST_CASE("Rusanov flux") {
  const double g = 9.81;
  SUBCASE("consistency") {
    const Conserved u{1.3, 0.4, -0.7};
    for (Axis ax : {Axis::X, Axis::Y}) {
      const Conserved f = rusanov_flux(u, u, ax, g);
      const Conserved e = physical_flux(u, ax, g);
      CHECK(f.h == e.h);
      CHECK(f.hu == e.hu);
      CHECK(f.hv == e.hv);
    }
    const Conserved still{2.0, 0.0, 0.0};
    CHECK(rusanov_flux(still, still, Axis::X, g).h == 0.0);
    CHECK(rusanov_flux(still, still, Axis::X, g).hu == doctest::Approx(0.5 * g * 4.0));
  }
  SUBCASE("reflection symmetry") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> h(0.5, 2.0), m(-1.0, 1.0);
    for (int k = 0; k < 200; ++k) {
      const Conserved l{h(rng), m(rng), m(rng)};
      const Conserved r{h(rng), m(rng), m(rng)};
      const Conserved f = rusanov_flux(l, r, Axis::X, g);
      // Mirror x -> -x: swap sides and flip the x-momentum.
      const Conserved fm = rusanov_flux(Conserved{r.h, -r.hu, r.hv}, Conserved{l.h, -l.hu, l.hv},
                                        Axis::X, g);
      CHECK(fm.h == doctest::Approx(-f.h).epsilon(1e-14));
      CHECK(fm.hu == doctest::Approx(f.hu).epsilon(1e-14));
      CHECK(fm.hv == doctest::Approx(-f.hv).epsilon(1e-14));
      // x and y fluxes are related by swapping the momentum components.
      const Conserved fy = rusanov_flux(Conserved{l.h, l.hv, l.hu}, Conserved{r.h, r.hv, r.hu},
                                        Axis::Y, g);
      CHECK(fy.h == doctest::Approx(f.h).epsilon(1e-14));
      CHECK(fy.hv == doctest::Approx(f.hu).epsilon(1e-14));
      CHECK(fy.hu == doctest::Approx(f.hv).epsilon(1e-14));
    }
  }
  SUBCASE("dry state is rejected") {
    CHECK_THROWS_AS(rusanov_flux(Conserved{0.0, 0.0, 0.0}, Conserved{1.0, 0.0, 0.0}, Axis::X, g),
                    std::domain_error);
    CHECK_THROWS_AS(rusanov_flux(Conserved{1.0, 0.0, 0.0}, Conserved{-1.0, 0.0, 0.0}, Axis::Y, g),
                    std::domain_error);
  }
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(Grid::square(4).validate(), std::invalid_argument);
  CHECK_NOTHROW(Grid::square(5).validate());
  CHECK_THROWS_AS((Grid{8, 8, 1.0, 1.0, 0.0, 1.0}.validate()), std::invalid_argument);
  const Grid g{10, 20, 0.0, 2.0, -1.0, 1.0};
  CHECK(g.dx() == doctest::Approx(0.2));
  CHECK(g.dy() == doctest::Approx(0.1));
  CHECK(g.cell(3, 4).x_lo == doctest::Approx(0.6));
  CHECK(g.cell(3, 4).y_hi == doctest::Approx(-0.5));
}

TEST_CASE("constant state is a fixed point") {
  VortexSpec flat = cos_vortex(1, 0.25, {0.7, -0.3});
  flat.gamma_amp = 0.0;
  FieldState s = initialize(RadialProfile(flat), Grid::square(12));
  const FieldState d = rhs(s);
  CHECK(max_abs(d.q) <= 1e-13);
  const FieldState before = s;
  advance(s, 0.3, 0.95);
  for (std::size_t k = 0; k < s.q.size(); ++k) {
    CHECK(s.q[k] == doctest::Approx(before.q[k]).epsilon(1e-13));
  }
  CHECK(s.time == 0.3);
}

TEST_CASE("rk_step with zero derivative is the identity") {
  VortexSpec still = cos_vortex(1, 0.25);
  still.gamma_amp = 0.0;
  still.u_inf = {0.0, 0.0};
  const FieldState s = initialize(RadialProfile(still), Grid::square(8));
  const FieldState n = rk_step(s, 0.01);
  CHECK(n.q == s.q);
  CHECK(n.time == doctest::Approx(0.01));
  CHECK_THROWS_AS(rk_step(s, 0.0), std::invalid_argument);
}

TEST_CASE("time step") {
  VortexSpec still = cos_vortex(1, 0.25);
  still.gamma_amp = 0.0;
  for (std::size_t n : {10u, 20u}) {
    const FieldState s = initialize(RadialProfile(still), Grid::square(n));
    CHECK(compute_dt(s, 0.95) == doctest::Approx(0.95 / (2.0 * n)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(compute_dt(initialize(RadialProfile(still), Grid::square(8)), 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(compute_dt(initialize(RadialProfile(still), Grid::square(8)), 1.5),
                  std::invalid_argument);

  const VortexSpec v = cos_vortex(1, 0.25, {1.0, 1.0}, 9.81);
  const FieldState s = initialize(RadialProfile(v), Grid::square(16));
  const double dt = compute_dt(s, 0.95);
  double speed = 0.0;
  for (std::size_t k = 0; k < s.grid.cells(); ++k) {
    const double c = std::sqrt(9.81 * s.q[k]);
    speed = std::max(speed, std::abs(s.hu()[k] / s.h()[k]) + c);
  }
  CHECK(dt > 0.0);
  CHECK(dt <= 0.95 * s.grid.dx() / speed);
}

TEST_CASE("steady residual decreases at fifth order") {
  const RadialProfile prof(cos_vortex(3, 0.45));
  double prev = 0.0;
  for (std::size_t n : {32u, 64u}) {
    const FieldState d = rhs(initialize(prof, Grid::square(n)));
    double l1 = 0.0;
    for (std::size_t k = 0; k < n * n; ++k) l1 += std::abs(d.q[k]);
    l1 /= static_cast<double>(n * n);
    if (prev > 0.0) {
      CAPTURE(std::log2(prev / l1));
      CHECK(std::log2(prev / l1) > 4.5);
    }
    prev = l1;
  }
}

TEST_CASE("x-only data matches a one-dimensional WENO5 / Rusanov reference") {
  const std::size_t n = 24;
  const double g = 1.0;
  FieldState s(Grid{n, 7, 0.0, 1.0, 0.0, 0.5}, g);
  std::vector<double> h(n), m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = (i + 0.5) / n;
    h[i] = 1.0 + 0.2 * std::sin(2 * pi * x) + 0.1 * (x > 0.5);
    m[i] = 0.3 * std::cos(2 * pi * x);
  }
  for (std::size_t j = 0; j < 7; ++j)
    for (std::size_t i = 0; i < n; ++i) s.set(i, j, Conserved{h[i], m[i], 0.0});

  // Reference: face i+1/2 between cells i and i+1.
  const auto at = [n](const std::vector<double>& v, long k) { return v[(k + 2 * n) % n]; };
  std::vector<double> fh(n), fm(n);
  for (long i = 0; i < static_cast<long>(n); ++i) {
    const auto left = [&](const std::vector<double>& v) {
      return weno_right(at(v, i - 2), at(v, i - 1), at(v, i), at(v, i + 1), at(v, i + 2));
    };
    const auto right = [&](const std::vector<double>& v) {
      return weno_right(at(v, i + 3), at(v, i + 2), at(v, i + 1), at(v, i), at(v, i - 1));
    };
    const double hl = left(h), hr = right(h), ml = left(m), mr = right(m);
    const double ul = ml / hl, ur = mr / hr;
    const double lam = std::max(std::abs(ul) + std::sqrt(g * hl), std::abs(ur) + std::sqrt(g * hr));
    fh[i] = 0.5 * (ml + mr) - 0.5 * lam * (hr - hl);
    fm[i] = 0.5 * (ml * ul + 0.5 * g * hl * hl + mr * ur + 0.5 * g * hr * hr) - 0.5 * lam * (mr - ml);
  }
  const FieldState d = rhs(s);
  const double dx = 1.0 / n;
  for (std::size_t j = 0; j < 7; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t im = (i + n - 1) % n;
      const std::size_t k = s.grid.index(i, j);
      CHECK(d.h()[k] == doctest::Approx(-(fh[i] - fh[im]) / dx).epsilon(1e-12).scale(1.0));
      CHECK(d.hu()[k] == doctest::Approx(-(fm[i] - fm[im]) / dx).epsilon(1e-12).scale(1.0));
      CHECK(std::abs(d.hv()[k]) <= 1e-12);
    }
  }
}

TEST_CASE("mass is conserved") {
  FieldState s = initialize(RadialProfile(cos_vortex(1, 0.25, {1.0, 1.0})), Grid::square(16));
  const double m0 = s.total_mass();
  double worst = 0.0;
  advance(s, 0.5, 0.95, ButcherTableau::rk65(),
          [&](const FieldState& st, const StepInfo&) {
            worst = std::max(worst, std::abs(st.total_mass() - m0) / m0);
          });
  CHECK(worst <= 1e-12);
  CHECK(s.time == 0.5);
}

TEST_CASE("90 degree rotation symmetry is preserved") {
  const std::size_t n = 20;
  FieldState s = initialize(RadialProfile(cos_vortex(2, 0.3)), Grid::square(n));
  advance(s, 0.3, 0.95);
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      // Rotation by +90 degrees about the center maps cell (i, j) to (n-1-j, i).
      const Conserved a = s.at(i, j);
      const Conserved b = s.at(n - 1 - j, i);
      worst = std::max({worst, std::abs(b.h - a.h), std::abs(b.hu + a.hv), std::abs(b.hv - a.hu)});
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("instability is reported with time and cell") {
  FieldState s(Grid::square(8), 1.0);
  for (std::size_t k = 0; k < s.grid.cells(); ++k) s.q[k] = 1.0;
  s.q[s.grid.index(3, 4)] = -1.0;
  try {
    rhs(s);
    FAIL("expected an InstabilityError");
  } catch (const InstabilityError& e) {
    CHECK(e.time() == 0.0);
    CHECK(std::string(e.what()).find("depth") != std::string::npos);
  }
}

TEST_CASE("translating vortex returns to its start after one period") {
  const VortexSpec v = cos_vortex(3, 0.45, {1.0, 1.0});
  const RadialProfile prof(v);
  double prev = 0.0;
  for (std::size_t n : {32u, 64u}) {
    const FieldState start = initialize(prof, Grid::square(n));
    FieldState s = start;
    advance(s, 1.0, 0.95);
    double err = 0.0;
    for (std::size_t k = 0; k < n * n; ++k) err += std::abs(s.q[k] - start.q[k]);
    err /= static_cast<double>(n * n);
    if (prev > 0.0) CHECK(std::log2(prev / err) > 3.0);
    prev = err;
  }
}
