#pragma once

// Cell-centered solution data bound to the grid it lives on.

#include <vector>

#include "advord/grid.hpp"

namespace advord {

struct SolutionField {
    Grid1D grid;
    std::vector<double> values;  // one per cell
    double time = 0.0;
};

}  // namespace advord
