#include "cascade_duel/reports.hpp"

#include <algorithm>

namespace cascade_duel {

namespace {

// Cell errors go into a single CSV field.
std::string csv_safe(std::string text) {
  std::replace_if(text.begin(), text.end(),
                  [](char c) { return c == ',' || c == '\n' || c == '\r' || c == '"'; }, ' ');
  return text;
}

}  // namespace

CsvTable trajectory_table(const meanfield::Trajectory& trajectory) {
  CsvTable t{{"t", "S", "A", "B", "AB", "a", "b"}, {}};
  for (std::size_t k = 0; k < trajectory.states.size(); ++k) {
    const auto& s = trajectory.states[k];
    t.add_row({format_real(trajectory.times[k]), format_real(s.S), format_real(s.A),
               format_real(s.B), format_real(s.AB), format_real(s.a), format_real(s.b)});
  }
  return t;
}

CsvTable grid_table(const meanfield::PhaseGrid& grid) {
  CsvTable t{{"beta1", "beta2", "S", "A", "B", "AB", "a", "b", "a_over_ab", "A_peak", "B_peak",
              "AB_peak", "steady", "error"},
             {}};
  for (const auto& c : grid.cells) {
    const auto& s = c.final_state;
    t.add_row({format_real(c.beta1), format_real(c.beta2), format_real(s.S), format_real(s.A),
               format_real(s.B), format_real(s.AB), format_real(s.a), format_real(s.b),
               format_real(c.a_share()), format_real(c.peak_A), format_real(c.peak_B),
               format_real(c.peak_AB), c.steady ? "1" : "0", csv_safe(c.error)});
  }
  return t;
}

CsvTable contour_table(const std::vector<meanfield::ContourPoint>& points) {
  CsvTable t{{"beta1", "beta2"}, {}};
  for (const auto& p : points) t.add_row({format_real(p.beta1), format_real(p.beta2)});
  return t;
}

}  // namespace cascade_duel
