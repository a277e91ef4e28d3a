#pragma once

// Manufactured exact solution u(x,t) = 1 + exp(0.8 x - 0.35 t), its analytic
// sources, and exact boundary/initial data. Sources are hard-coded derivatives;
// numeric differentiation would pollute the convergence studies.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "advord/field.hpp"
#include "advord/format.hpp"
#include "advord/grid.hpp"

namespace advord {

struct ProblemSpec {
    double a = 1.0;  // advection speed, positive

    ProblemSpec() = default;

    explicit ProblemSpec(double speed) : a(speed) {
        if (!(a > 0.0))
            throw std::invalid_argument("ProblemSpec: advection speed must be positive, got " + detail::fmt17(speed));
    }
};

namespace solution {
inline constexpr double offset = 1.0;
inline constexpr double spatial_rate = 0.8;
inline constexpr double temporal_rate = -0.35;
}  // namespace solution

inline double u_exact(double x, double t) {
    return solution::offset + std::exp(solution::spatial_rate * x + solution::temporal_rate * t);
}

// Full advection source s = du/dt + a du/dx for the manufactured solution.
inline double forcing(const ProblemSpec& spec, double x, double t) {
    return (solution::spatial_rate * spec.a + solution::temporal_rate) *
           std::exp(solution::spatial_rate * x + solution::temporal_rate * t);
}

// du/dt of the manufactured solution: the source for which u_exact solves
// the pure time-integration problem du/dt = s(x,t) at every x.
inline double exact_time_derivative(double x, double t) {
    return solution::temporal_rate * std::exp(solution::spatial_rate * x + solution::temporal_rate * t);
}

// a du/dx of the manufactured solution at t = 0: the source for which
// u_exact(., 0) is the exact solution of the steady advection problem.
inline double steady_forcing(const ProblemSpec& spec, double x) {
    return solution::spatial_rate * spec.a * std::exp(solution::spatial_rate * x);
}

inline double exact_inflow(double t) { return u_exact(0.0, t); }

inline SolutionField initial_field(const ProblemSpec&, const Grid1D& grid) {
    SolutionField f;
    f.grid = grid;
    f.values.resize(grid.n_cells);
    for (int j = 0; j < grid.n_cells; ++j) f.values[j] = u_exact(grid.centers[j], 0.0);
    f.time = 0.0;
    return f;
}

}  // namespace advord
