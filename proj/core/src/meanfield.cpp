#include "cascade_duel/meanfield.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "cascade_duel/error.hpp"

namespace cascade_duel::meanfield {

CompartmentState CompartmentState::seeded(double A0, double B0) {
  if (!(A0 >= 0.0 && B0 >= 0.0 && A0 + B0 <= 1.0)) {
    throw std::invalid_argument("CompartmentState::seeded: need A0, B0 >= 0 and A0 + B0 <= 1");
  }
  CompartmentState s;
  s.S = 1.0 - A0 - B0;
  s.A = A0;
  s.B = B0;
  return s;
}

double CompartmentState::active() const noexcept { return std::max({A, B, AB}); }

CompartmentState& CompartmentState::operator+=(const CompartmentState& o) noexcept {
  S += o.S;
  A += o.A;
  B += o.B;
  AB += o.AB;
  a += o.a;
  b += o.b;
  return *this;
}

CompartmentState operator*(double k, CompartmentState s) noexcept {
  s.S *= k;
  s.A *= k;
  s.B *= k;
  s.AB *= k;
  s.a *= k;
  s.b *= k;
  return s;
}

CompartmentState rhs(const CompartmentState& s, const RateParams& p) noexcept {
  // Written so that swapping (A, a, beta1) with (B, b, beta2) swaps the
  // results bit for bit.
  const double push1 = s.A + s.AB;
  const double push2 = s.B + s.AB;
  CompartmentState d;
  d.S = -p.beta1 * s.S * push1 - p.beta2 * s.S * push2;
  d.A = p.beta1 * s.S * push1 - p.beta2 * s.A * push2 - s.A;
  d.B = p.beta2 * s.S * push2 - p.beta1 * s.B * push1 - s.B;
  d.AB = p.beta2 * s.A * push2 + p.beta1 * s.B * push1 - 2.0 * s.AB;
  d.a = s.A + s.AB;
  d.b = s.B + s.AB;
  return d;
}

namespace {

constexpr double kNegativeSlack = 1e-12;

void clamp_component(double& x, const char* name, double t) {
  if (x >= 0.0) return;
  if (x >= -kNegativeSlack) {
    x = 0.0;
    return;
  }
  throw NumericalError(std::string("meanfield: compartment ") + name + " went negative (" +
                       std::to_string(x) + ") at t = " + std::to_string(t) +
                       "; try a smaller dt");
}

CompartmentState rk4_step(const CompartmentState& y, const RateParams& p, double dt) {
  const CompartmentState k1 = rhs(y, p);
  const CompartmentState k2 = rhs(y + (0.5 * dt) * k1, p);
  const CompartmentState k3 = rhs(y + (0.5 * dt) * k2, p);
  const CompartmentState k4 = rhs(y + dt * k3, p);
  return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

void note_peak(CompartmentState& peak, const CompartmentState& s) {
  peak.A = std::max(peak.A, s.A);
  peak.B = std::max(peak.B, s.B);
  peak.AB = std::max(peak.AB, s.AB);
}

}  // namespace

Trajectory integrate(const CompartmentState& init, const RateParams& p,
                     const IntegrationOptions& options) {
  if (!(options.dt > 0.0)) throw std::invalid_argument("integrate: dt must be > 0");
  if (!(options.t_end >= 0.0)) throw std::invalid_argument("integrate: t_end must be >= 0");
  if (!(p.beta1 >= 0.0 && p.beta2 >= 0.0)) {
    throw std::invalid_argument("integrate: spreading rates must be >= 0");
  }
  if (std::abs(init.sum() - 1.0) > 1e-9) {
    throw std::invalid_argument("integrate: initial compartments must sum to 1");
  }

  Trajectory tr;
  tr.peak = CompartmentState{0, 0, 0, 0, 0, 0};
  tr.times.push_back(0.0);
  tr.states.push_back(init);
  note_peak(tr.peak, init);
  tr.max_conservation_error = std::abs(init.sum() - 1.0);
  if (init.active() < options.steady_tol) {
    tr.steady_state_reached = true;
    tr.steady_time = 0.0;
    if (options.stop_at_steady) return tr;
  }

  const auto total_steps =
      static_cast<std::size_t>(std::ceil(options.t_end / options.dt - 1e-9));
  CompartmentState y = init;
  for (std::size_t k = 1; k <= total_steps; ++k) {
    const double t = static_cast<double>(k) * options.dt;
    y = rk4_step(y, p, options.dt);
    clamp_component(y.S, "S", t);
    clamp_component(y.A, "A", t);
    clamp_component(y.B, "B", t);
    clamp_component(y.AB, "AB", t);
    clamp_component(y.a, "a", t);
    clamp_component(y.b, "b", t);
    const double drift = std::abs(y.sum() - 1.0);
    tr.max_conservation_error = std::max(tr.max_conservation_error, drift);
    if (drift > options.drift_limit) {
      throw NumericalError("meanfield: conservation drift " + std::to_string(drift) +
                           " at t = " + std::to_string(t) + "; try a smaller dt");
    }
    note_peak(tr.peak, y);
    tr.steps = k;

    const bool steady_now = y.active() < options.steady_tol;
    if (steady_now && !tr.steady_state_reached) {
      tr.steady_state_reached = true;
      tr.steady_time = t;
    }
    const bool last = k == total_steps || (steady_now && options.stop_at_steady);
    if (last || (options.record_stride > 0 && k % options.record_stride == 0)) {
      tr.times.push_back(t);
      tr.states.push_back(y);
    }
    if (last) break;
  }
  return tr;
}

double GridCell::a_share() const noexcept {
  if (!error.empty()) return std::numeric_limits<double>::quiet_NaN();
  const double total = final_state.a + final_state.b;
  return total > 0.0 ? final_state.a / total : std::numeric_limits<double>::quiet_NaN();
}

namespace {

std::vector<double> lattice(BetaRange range, std::size_t resolution) {
  if (!(range.min >= 0.0 && range.max >= range.min)) {
    throw std::invalid_argument("sweep_grid: need 0 <= min <= max for each beta range");
  }
  std::vector<double> v(resolution);
  if (resolution == 1) {
    v[0] = range.min;
    return v;
  }
  const double span = range.max - range.min;
  const double denom = static_cast<double>(resolution - 1);
  for (std::size_t k = 0; k < resolution; ++k) {
    v[k] = range.min + span * (static_cast<double>(k) / denom);
  }
  v.back() = range.max;
  return v;
}

}  // namespace

PhaseGrid sweep_grid(const CompartmentState& init, BetaRange beta1, BetaRange beta2,
                     std::size_t resolution, const IntegrationOptions& options,
                     unsigned workers) {
  if (resolution == 0) throw std::invalid_argument("sweep_grid: resolution must be >= 1");
  PhaseGrid grid;
  grid.beta1_values = lattice(beta1, resolution);
  grid.beta2_values = lattice(beta2, resolution);
  grid.cells.resize(resolution * resolution);

  IntegrationOptions cell_options = options;
  cell_options.record_stride = 0;

  auto run_cell = [&](std::size_t idx) {
    GridCell& cell = grid.cells[idx];
    cell.beta1 = grid.beta1_values[idx / resolution];
    cell.beta2 = grid.beta2_values[idx % resolution];
    try {
      auto tr = integrate(init, {cell.beta1, cell.beta2}, cell_options);
      cell.final_state = tr.final_state();
      cell.peak_A = tr.peak.A;
      cell.peak_B = tr.peak.B;
      cell.peak_AB = tr.peak.AB;
      cell.steady = tr.steady_state_reached;
    } catch (const std::exception& e) {
      cell.error = e.what();
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  if (workers <= 1) {
    for (std::size_t idx = 0; idx < grid.cells.size(); ++idx) run_cell(idx);
    return grid;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t idx = next++; idx < grid.cells.size(); idx = next++) run_cell(idx);
    });
  }
  pool.clear();
  return grid;
}

std::vector<ContourPoint> contour_equilibrium(const PhaseGrid& grid, double level) {
  std::vector<ContourPoint> out;
  const std::size_t rows = grid.beta1_values.size();
  const std::size_t cols = grid.beta2_values.size();
  auto value = [&](std::size_t i, std::size_t j) { return grid.at(i, j).a_share() - level; };
  auto crossing = [&](std::size_t i1, std::size_t j1, std::size_t i2, std::size_t j2) {
    const double f1 = value(i1, j1);
    const double f2 = value(i2, j2);
    if (!std::isfinite(f1) || !std::isfinite(f2) || !(f1 * f2 < 0.0)) return;
    const double t = f1 / (f1 - f2);
    const auto& c1 = grid.at(i1, j1);
    const auto& c2 = grid.at(i2, j2);
    out.push_back({c1.beta1 + t * (c2.beta1 - c1.beta1), c1.beta2 + t * (c2.beta2 - c1.beta2)});
  };
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (value(i, j) == 0.0) {
        out.push_back({grid.at(i, j).beta1, grid.at(i, j).beta2});
      }
      if (j + 1 < cols) crossing(i, j, i, j + 1);
      if (i + 1 < rows) crossing(i, j, i + 1, j);
    }
  }
  std::sort(out.begin(), out.end(), [](const ContourPoint& l, const ContourPoint& r) {
    return l.beta1 != r.beta1 ? l.beta1 < r.beta1 : l.beta2 < r.beta2;
  });
  return out;
}

}  // namespace cascade_duel::meanfield
