#include "swvortex/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "swvortex/quadrature.hpp"
#include "swvortex/rusanov.hpp"
#include "swvortex/weno5.hpp"

namespace swvortex {

namespace {

constexpr std::size_t kFacePoints = 4;

struct FaceQuadrature {
  Weno5Points<2> faces{{-0.5, 0.5}};
  Weno5Points<kFacePoints> gauss;
  std::array<double, kFacePoints> weights{};

  FaceQuadrature() : gauss(nodes()) {
    const GaussLegendre rule(kFacePoints);
    for (std::size_t k = 0; k < kFacePoints; ++k) weights[k] = 0.5 * rule.weights[k];
  }

  static std::array<double, kFacePoints> nodes() {
    const GaussLegendre rule(kFacePoints);
    std::array<double, kFacePoints> xi{};
    for (std::size_t k = 0; k < kFacePoints; ++k) xi[k] = 0.5 * rule.nodes[k];
    return xi;
  }
};

const FaceQuadrature& face_quadrature() {
  static const FaceQuadrature fq;
  return fq;
}

// Periodic index table: table[k + 2] = (k mod n) for k in [-2, n + 2).
std::vector<std::size_t> periodic_table(std::size_t n) {
  std::vector<std::size_t> t(n + 4);
  for (std::size_t k = 0; k < n + 4; ++k) t[k] = (k + n - 2) % n;
  return t;
}

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 16) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

[[noreturn]] void throw_depth(const char* where, double time, std::size_t i, std::size_t j,
                              double h) {
  std::ostringstream os;
  os << "nonpositive or non-finite depth " << h << " in " << where << " at t=" << time
     << ", cell (" << i << ", " << j << ")";
  throw InstabilityError(os.str(), time, i, j);
}

}  // namespace

Cell Grid::cell(std::size_t i, std::size_t j) const {
  const double hx = dx();
  const double hy = dy();
  return Cell{x_lo + hx * static_cast<double>(i), x_lo + hx * static_cast<double>(i + 1),
              y_lo + hy * static_cast<double>(j), y_lo + hy * static_cast<double>(j + 1)};
}

void Grid::validate() const {
  if (nx < 5 || ny < 5) {
    throw std::invalid_argument("grid needs at least 5 cells per direction");
  }
  if (!(x_hi > x_lo) || !(y_hi > y_lo)) {
    throw std::invalid_argument("grid domain must have positive extent");
  }
}

FieldState::FieldState(Grid grid_, double g_, double time_)
    : grid(grid_), g(g_), time(time_), q(3 * grid_.cells(), 0.0) {}

Conserved FieldState::at(std::size_t i, std::size_t j) const {
  const std::size_t n = grid.cells();
  const std::size_t k = grid.index(i, j);
  return Conserved{q[k], q[n + k], q[2 * n + k]};
}

void FieldState::set(std::size_t i, std::size_t j, const Conserved& u) {
  const std::size_t n = grid.cells();
  const std::size_t k = grid.index(i, j);
  q[k] = u.h;
  q[n + k] = u.hu;
  q[2 * n + k] = u.hv;
}

double FieldState::total_mass() const { return pairwise_sum(h()) * grid.dx() * grid.dy(); }

SweOperator::SweOperator(Grid grid, double g)
    : grid_(grid),
      g_(g),
      low_(3 * grid.cells()),
      high_(3 * grid.cells()),
      flux_(3 * grid.cells()),
      dq_(3 * grid.cells()) {
  grid_.validate();
}

void SweOperator::x_fluxes(std::span<const double> q, double time) {
  const FaceQuadrature& fq = face_quadrature();
  const std::size_t nx = grid_.nx;
  const std::size_t ny = grid_.ny;
  const std::size_t n = grid_.cells();
  const auto wx = periodic_table(nx);
  const auto wy = periodic_table(ny);

  // Normal pass: face-line averages on both x-faces of every cell.
  for (std::size_t c = 0; c < 3; ++c) {
    for (std::size_t j = 0; j < ny; ++j) {
      const double* row = q.data() + c * n + j * nx;
      double* lo = low_.data() + c * n + j * nx;
      double* hi = high_.data() + c * n + j * nx;
      for (std::size_t i = 0; i < nx; ++i) {
        const double v[5] = {row[wx[i]], row[wx[i + 1]], row[wx[i + 2]], row[wx[i + 3]],
                             row[wx[i + 4]]};
        double out[2];
        fq.faces.evaluate(v, out);
        lo[i] = out[0];
        hi[i] = out[1];
      }
    }
  }

  // Tangential pass along y to the Gauss nodes of each face, then fluxes.
  // Face i is the high face of cell i (shared with cell i + 1).
  for (std::size_t j = 0; j < ny; ++j) {
    std::size_t rows[5];
    for (int d = 0; d < 5; ++d) rows[d] = wy[j + d] * nx;
    for (std::size_t i = 0; i < nx; ++i) {
      const std::size_t ip = wx[i + 3];
      double left[3][kFacePoints];
      double right[3][kFacePoints];
      for (std::size_t c = 0; c < 3; ++c) {
        const double* hi = high_.data() + c * n;
        const double* lo = low_.data() + c * n;
        const double vl[5] = {hi[rows[0] + i], hi[rows[1] + i], hi[rows[2] + i], hi[rows[3] + i],
                              hi[rows[4] + i]};
        const double vr[5] = {lo[rows[0] + ip], lo[rows[1] + ip], lo[rows[2] + ip],
                              lo[rows[3] + ip], lo[rows[4] + ip]};
        fq.gauss.evaluate(vl, left[c]);
        fq.gauss.evaluate(vr, right[c]);
      }
      Conserved total;
      for (std::size_t k = 0; k < kFacePoints; ++k) {
        const Conserved ul{left[0][k], left[1][k], left[2][k]};
        const Conserved ur{right[0][k], right[1][k], right[2][k]};
        if (!(ul.h > 0.0)) throw_depth("x-face reconstruction", time, i, j, ul.h);
        if (!(ur.h > 0.0)) throw_depth("x-face reconstruction", time, ip, j, ur.h);
        const Conserved f = rusanov_flux(ul, ur, Axis::X, g_);
        total.h += fq.weights[k] * f.h;
        total.hu += fq.weights[k] * f.hu;
        total.hv += fq.weights[k] * f.hv;
      }
      const std::size_t idx = j * nx + i;
      flux_[idx] = total.h;
      flux_[n + idx] = total.hu;
      flux_[2 * n + idx] = total.hv;
    }
  }

  const double inv_dx = 1.0 / grid_.dx();
  for (std::size_t c = 0; c < 3; ++c) {
    for (std::size_t j = 0; j < ny; ++j) {
      const double* f = flux_.data() + c * n + j * nx;
      double* out = dq_.data() + c * n + j * nx;
      for (std::size_t i = 0; i < nx; ++i) {
        out[i] = -(f[i] - f[wx[i + 1]]) * inv_dx;
      }
    }
  }
}

void SweOperator::y_fluxes(std::span<const double> q, double time) {
  const FaceQuadrature& fq = face_quadrature();
  const std::size_t nx = grid_.nx;
  const std::size_t ny = grid_.ny;
  const std::size_t n = grid_.cells();
  const auto wx = periodic_table(nx);
  const auto wy = periodic_table(ny);

  for (std::size_t c = 0; c < 3; ++c) {
    for (std::size_t j = 0; j < ny; ++j) {
      const double* base = q.data() + c * n;
      const double* r0 = base + wy[j] * nx;
      const double* r1 = base + wy[j + 1] * nx;
      const double* r2 = base + wy[j + 2] * nx;
      const double* r3 = base + wy[j + 3] * nx;
      const double* r4 = base + wy[j + 4] * nx;
      double* lo = low_.data() + c * n + j * nx;
      double* hi = high_.data() + c * n + j * nx;
      for (std::size_t i = 0; i < nx; ++i) {
        const double v[5] = {r0[i], r1[i], r2[i], r3[i], r4[i]};
        double out[2];
        fq.faces.evaluate(v, out);
        lo[i] = out[0];
        hi[i] = out[1];
      }
    }
  }

  // Face j is the high face of row j (shared with row j + 1).
  for (std::size_t j = 0; j < ny; ++j) {
    const std::size_t jp = wy[j + 3];
    for (std::size_t i = 0; i < nx; ++i) {
      double left[3][kFacePoints];
      double right[3][kFacePoints];
      for (std::size_t c = 0; c < 3; ++c) {
        const double* hi = high_.data() + c * n + j * nx;
        const double* lo = low_.data() + c * n + jp * nx;
        const double vl[5] = {hi[wx[i]], hi[wx[i + 1]], hi[wx[i + 2]], hi[wx[i + 3]],
                              hi[wx[i + 4]]};
        const double vr[5] = {lo[wx[i]], lo[wx[i + 1]], lo[wx[i + 2]], lo[wx[i + 3]],
                              lo[wx[i + 4]]};
        fq.gauss.evaluate(vl, left[c]);
        fq.gauss.evaluate(vr, right[c]);
      }
      Conserved total;
      for (std::size_t k = 0; k < kFacePoints; ++k) {
        const Conserved ul{left[0][k], left[1][k], left[2][k]};
        const Conserved ur{right[0][k], right[1][k], right[2][k]};
        if (!(ul.h > 0.0)) throw_depth("y-face reconstruction", time, i, j, ul.h);
        if (!(ur.h > 0.0)) throw_depth("y-face reconstruction", time, i, jp, ur.h);
        const Conserved f = rusanov_flux(ul, ur, Axis::Y, g_);
        total.h += fq.weights[k] * f.h;
        total.hu += fq.weights[k] * f.hu;
        total.hv += fq.weights[k] * f.hv;
      }
      const std::size_t idx = j * nx + i;
      flux_[idx] = total.h;
      flux_[n + idx] = total.hu;
      flux_[2 * n + idx] = total.hv;
    }
  }

  const double inv_dy = 1.0 / grid_.dy();
  for (std::size_t c = 0; c < 3; ++c) {
    for (std::size_t j = 0; j < ny; ++j) {
      const double* f = flux_.data() + c * n + j * nx;
      const double* fm = flux_.data() + c * n + wy[j + 1] * nx;
      double* out = dq_.data() + c * n + j * nx;
      for (std::size_t i = 0; i < nx; ++i) {
        out[i] -= (f[i] - fm[i]) * inv_dy;
      }
    }
  }
}

void SweOperator::operator()(std::span<const double> q, std::span<double> dqdt, double time) {
  if (q.size() != 3 * grid_.cells() || dqdt.size() != q.size()) {
    throw std::invalid_argument("SweOperator: state size does not match the grid");
  }
  x_fluxes(q, time);
  y_fluxes(q, time);
  std::copy(dq_.begin(), dq_.end(), dqdt.begin());
}

FieldState rhs(const FieldState& state) {
  SweOperator op(state.grid, state.g);
  FieldState out(state.grid, state.g, state.time);
  op(state.q, out.q, state.time);
  return out;
}

double compute_dt(const FieldState& state, double cfl) {
  if (!(cfl > 0.0) || cfl > 1.0) {
    throw std::invalid_argument("cfl must be in (0, 1]");
  }
  const auto h = state.h();
  const auto hu = state.hu();
  const auto hv = state.hv();
  const double inv_dx = 1.0 / state.grid.dx();
  const double inv_dy = 1.0 / state.grid.dy();
  double rate = 0.0;
  for (std::size_t k = 0; k < h.size(); ++k) {
    const double c = std::sqrt(state.g * h[k]);
    const double u = std::abs(hu[k] / h[k]);
    const double v = std::abs(hv[k] / h[k]);
    rate = std::max(rate, (u + c) * inv_dx + (v + c) * inv_dy);
  }
  return cfl / rate;
}

FieldState rk_step(const FieldState& state, double dt, const ButcherTableau& tableau) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  FieldState next = state;
  SweOperator op(state.grid, state.g);
  RkWorkspace ws;
  swvortex::rk_step(
      tableau, std::span<double>(next.q), state.time, dt,
      [&](double t, std::span<const double> y, std::span<double> dy) { op(y, dy, t); }, ws);
  next.time = state.time + dt;
  return next;
}

FieldState initialize(const RadialProfile& profile, const Grid& grid, double t, std::size_t q) {
  grid.validate();
  FieldState state(grid, profile.spec().g, t);
  const GaussLegendre rule(q);
  for (std::size_t j = 0; j < grid.ny; ++j) {
    for (std::size_t i = 0; i < grid.nx; ++i) {
      state.set(i, j, exact_cell_average(profile, grid.cell(i, j), t, rule, grid.period()));
    }
  }
  return state;
}

void advance(FieldState& state, double t_final, double cfl, const ButcherTableau& tableau,
             const std::function<void(const FieldState&, const StepInfo&)>& observer) {
  SweOperator op(state.grid, state.g);
  RkWorkspace ws;
  const std::size_t n = state.grid.cells();
  std::size_t step = 0;
  while (state.time < t_final) {
    double dt = compute_dt(state, cfl);
    bool last = false;
    if (state.time + dt >= t_final) {
      dt = t_final - state.time;
      last = true;
    }
    swvortex::rk_step(
        tableau, std::span<double>(state.q), state.time, dt,
        [&](double t, std::span<const double> y, std::span<double> dy) { op(y, dy, t); }, ws);
    state.time = last ? t_final : state.time + dt;
    ++step;
    for (std::size_t k = 0; k < n; ++k) {
      const double h = state.q[k];
      if (!(h > 0.0) || !std::isfinite(h) || !std::isfinite(state.q[n + k]) ||
          !std::isfinite(state.q[2 * n + k])) {
        throw_depth("state", state.time, k % state.grid.nx, k / state.grid.nx, h);
      }
    }
    if (observer) observer(state, StepInfo{step, state.time, dt});
  }
}

FieldState simulate(const VortexSpec& spec, const Grid& grid, double cfl, double t_final,
                    std::size_t q) {
  const RadialProfile profile(spec);
  FieldState state = initialize(profile, grid, 0.0, q);
  advance(state, t_final, cfl);
  return state;
}

}  // namespace swvortex
