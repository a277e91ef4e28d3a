#pragma once

// Second-order upwind finite-volume spatial discretization with one-sided
// boundary closures, and a direct banded solve for the steady problem.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "advord/field.hpp"
#include "advord/format.hpp"
#include "advord/grid.hpp"
#include "advord/linalg.hpp"
#include "advord/manufactured.hpp"

namespace advord {

// t -> inflow value at x = 0. Pluggable so linear-exactness properties can be
// tested with non-manufactured data.
using BoundaryValueFn = std::function<double(double)>;

// x -> source value, for steady problems.
using SteadySourceFn = std::function<double(double)>;

// Res_j = f_{j+1/2} - f_{j-1/2}. Interior fluxes reconstruct the upwind cell's
// value with a centered divided difference; the first interior face and the
// outflow face use one-sided differences; the inflow face carries boundary
// data only.
inline std::vector<double> residual(const SolutionField& field, const ProblemSpec& spec, double t,
                                    const BoundaryValueFn& inflow) {
    const Grid1D& g = field.grid;
    const int n = g.n_cells;
    detail::check_cell_count(n, "residual");
    if (static_cast<int>(field.values.size()) != n)
        throw std::invalid_argument("residual: field has " + std::to_string(field.values.size()) +
                                    " values for " + std::to_string(n) + " cells");
    const std::vector<double>& u = field.values;
    const std::vector<double>& x = g.centers;
    const std::vector<double>& h = g.volumes;
    const double a = spec.a;

    std::vector<double> flux(n + 1);
    flux[0] = a * inflow(t);
    flux[1] = a * (u[0] + (u[1] - u[0]) / (x[1] - x[0]) * (h[0] / 2.0));
    for (int i = 2; i < n; ++i)
        flux[i] = a * (u[i - 1] + (u[i] - u[i - 2]) / (x[i] - x[i - 2]) * (h[i - 1] / 2.0));
    flux[n] = a * (u[n - 1] + (u[n - 1] - u[n - 2]) / (x[n - 1] - x[n - 2]) * (h[n - 1] / 2.0));

    std::vector<double> res(n);
    for (int j = 0; j < n; ++j) res[j] = flux[j + 1] - flux[j];
    return res;
}

// Solves Res_j(u) = source(x_j) * h_j directly. The residual is linear in u
// with each row coupling cells {j-2 .. j+1}, so the system is banded
// (kl = 2, ku = 1) and a direct factorization is exact to round-off; no
// pseudo-time iteration noise enters the convergence studies.
inline SolutionField steady_solve(const ProblemSpec& spec, const Grid1D& grid, const SteadySourceFn& source,
                                  double inflow_value) {
    const int n = grid.n_cells;
    detail::check_cell_count(n, "steady_solve");
    const std::vector<double>& x = grid.centers;
    const std::vector<double>& h = grid.volumes;
    const double a = spec.a;

    detail::BandedSolver sys(n, 2, 1);
    // Flux f_{i} couples into Res_{i-1} with +1 and Res_i with -1; assemble
    // each flux's cell coefficients once and scatter with both signs.
    const auto scatter = [&sys, n](int face, int cell, double coeff) {
        if (face - 1 >= 0 && face - 1 < n) sys.entry(face - 1, cell) += coeff;
        if (face < n) sys.entry(face, cell) -= coeff;
    };
    {
        const double g1 = (h[0] / 2.0) / (x[1] - x[0]);
        scatter(1, 0, a * (1.0 - g1));
        scatter(1, 1, a * g1);
    }
    for (int i = 2; i < n; ++i) {
        const double gi = (h[i - 1] / 2.0) / (x[i] - x[i - 2]);
        scatter(i, i - 2, -a * gi);
        scatter(i, i - 1, a);
        scatter(i, i, a * gi);
    }
    {
        const double gn = (h[n - 1] / 2.0) / (x[n - 1] - x[n - 2]);
        scatter(n, n - 2, -a * gn);
        scatter(n, n - 1, a * (1.0 + gn));
    }

    std::vector<double> rhs(n);
    for (int j = 0; j < n; ++j) rhs[j] = source(x[j]) * h[j];
    rhs[0] += a * inflow_value;  // the inflow flux is constant data, not an unknown

    sys.factor();
    sys.solve(rhs);

    SolutionField out;
    out.grid = grid;
    out.values = std::move(rhs);
    out.time = 0.0;

    // Defining property of the solve; a violation means the assembly and the
    // flux evaluation disagree.
    const std::vector<double> res = residual(out, spec, 0.0, [inflow_value](double) { return inflow_value; });
    double worst = 0.0;
    for (int j = 0; j < n; ++j) worst = std::max(worst, std::abs(res[j] - source(x[j]) * h[j]));
    if (!(worst <= 1e-12))
        throw NumericalError("steady_solve: solution residual " + detail::fmt17(worst) + " exceeds 1e-12");
    return out;
}

// Manufactured steady problem: source a du/dx of the exact solution at t = 0,
// inflow pinned to the exact boundary value.
inline SolutionField steady_solve(const ProblemSpec& spec, const Grid1D& grid) {
    return steady_solve(
        spec, grid, [spec](double x) { return steady_forcing(spec, x); }, u_exact(0.0, 0.0));
}

}  // namespace advord
