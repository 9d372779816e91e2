#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cascade_duel::meanfield {

/// Fractions of the population per compartment: uninformed (S), informed by
/// one information (A, B) or both (AB), and supporters (a, b).
struct CompartmentState {
  double S = 1.0;
  double A = 0.0;
  double B = 0.0;
  double AB = 0.0;
  double a = 0.0;
  double b = 0.0;

  /// S = 1 - A0 - B0, nothing else populated.
  static CompartmentState seeded(double A0, double B0);

  double sum() const noexcept { return S + A + B + AB + a + b; }
  double active() const noexcept;

  CompartmentState& operator+=(const CompartmentState& o) noexcept;
  friend CompartmentState operator+(CompartmentState l, const CompartmentState& r) noexcept {
    return l += r;
  }
  friend CompartmentState operator*(double k, CompartmentState s) noexcept;
  bool operator==(const CompartmentState&) const = default;
};

struct RateParams {
  double beta1 = 1.0;
  double beta2 = 1.0;
};

/// Time derivative of every compartment.
CompartmentState rhs(const CompartmentState& s, const RateParams& p) noexcept;

struct IntegrationOptions {
  double dt = 0.01;
  double t_end = 200.0;
  /// Steady once max(A, B, AB) drops below this.
  double steady_tol = 1e-6;
  /// Keep every k-th state (the final state is always kept). 0 keeps only
  /// the initial and final states.
  std::size_t record_stride = 1;
  /// Abort when |sum - 1| exceeds this.
  double drift_limit = 1e-6;
  /// Stop at steady state rather than running to t_end.
  bool stop_at_steady = true;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<CompartmentState> states;
  bool steady_state_reached = false;
  std::optional<double> steady_time;
  /// Largest values of A, B and AB seen on the path (other fields unused).
  CompartmentState peak;
  double max_conservation_error = 0.0;
  std::size_t steps = 0;

  const CompartmentState& final_state() const { return states.back(); }
};

/// Classical fixed-step RK4. Throws NumericalError on conservation drift or
/// a compartment going below -1e-12; smaller negatives are clamped to 0.
Trajectory integrate(const CompartmentState& init, const RateParams& p,
                     const IntegrationOptions& options = {});

struct BetaRange {
  double min = 0.0;
  double max = 20.0;
};

struct GridCell {
  double beta1 = 0.0;
  double beta2 = 0.0;
  CompartmentState final_state;
  double peak_A = 0.0;
  double peak_B = 0.0;
  double peak_AB = 0.0;
  bool steady = false;
  /// Non-empty when integration failed for this cell.
  std::string error;

  /// a / (a + b); NaN when a + b == 0 or the cell failed.
  double a_share() const noexcept;
};

/// Rows are beta1 values, columns beta2 values.
struct PhaseGrid {
  std::vector<double> beta1_values;
  std::vector<double> beta2_values;
  std::vector<GridCell> cells;

  const GridCell& at(std::size_t i, std::size_t j) const {
    return cells[i * beta2_values.size() + j];
  }
};

/// resolution x resolution lattice over the two ranges (inclusive).
PhaseGrid sweep_grid(const CompartmentState& init, BetaRange beta1, BetaRange beta2,
                     std::size_t resolution, const IntegrationOptions& options = {},
                     unsigned workers = 0);

struct ContourPoint {
  double beta1 = 0.0;
  double beta2 = 0.0;
};

/// Points where a/(a+b) crosses `level`: grid nodes sitting exactly on it
/// plus linear interpolation along every lattice edge with a strict sign
/// change. Ordered by beta1 then beta2.
std::vector<ContourPoint> contour_equilibrium(const PhaseGrid& grid, double level = 0.5);

}  // namespace cascade_duel::meanfield
