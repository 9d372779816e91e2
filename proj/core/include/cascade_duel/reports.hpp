#pragma once

#include <vector>

#include "cascade_duel/csv.hpp"
#include "cascade_duel/meanfield.hpp"

namespace cascade_duel {

/// t,S,A,B,AB,a,b
CsvTable trajectory_table(const meanfield::Trajectory& trajectory);

/// beta1,beta2,S,A,B,AB,a,b,a_over_ab followed by A_peak,B_peak,AB_peak,
/// steady and error. Row-major with beta1 outer.
CsvTable grid_table(const meanfield::PhaseGrid& grid);

/// beta1,beta2
CsvTable contour_table(const std::vector<meanfield::ContourPoint>& points);

}  // namespace cascade_duel
