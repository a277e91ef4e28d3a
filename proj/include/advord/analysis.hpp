#pragma once

// Error norms against the exact solution and observed-order bookkeeping over
// refinement families.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "advord/field.hpp"
#include "advord/format.hpp"
#include "advord/manufactured.hpp"

namespace advord {

namespace detail {
inline void check_time_stamp(const SolutionField& field, double t, const char* who) {
    if (!(std::abs(field.time - t) <= 1e-12))
        throw std::invalid_argument(std::string(who) + ": field time stamp " + fmt17(field.time) +
                                    " does not match requested time " + fmt17(t));
}
}  // namespace detail

// Unweighted mean of absolute cell-center errors (sum / N, not volume
// weighted); that is the norm the convergence statements are made in.
inline double l1_error(const SolutionField& field, double t) {
    detail::check_time_stamp(field, t, "l1_error");
    double sum = 0.0;
    for (int j = 0; j < field.grid.n_cells; ++j)
        sum += std::abs(field.values[j] - u_exact(field.grid.centers[j], t));
    return sum / field.grid.n_cells;
}

struct LinfResult {
    double value = 0.0;
    int argmax_cell = 1;  // 1-based; ties resolve to the smallest index
};

inline LinfResult linf_error(const SolutionField& field, double t) {
    detail::check_time_stamp(field, t, "linf_error");
    LinfResult r;
    for (int j = 0; j < field.grid.n_cells; ++j) {
        const double e = std::abs(field.values[j] - u_exact(field.grid.centers[j], t));
        if (e > r.value) {
            r.value = e;
            r.argmax_cell = j + 1;
        }
    }
    return r;
}

inline double observed_order(double error_coarse, double error_fine, double refinement_ratio = 2.0) {
    if (!(error_coarse > 0.0) || !(error_fine > 0.0))
        throw std::invalid_argument("observed_order: errors must be positive (zero error means an exact solution or a bug)");
    if (!(refinement_ratio > 1.0))
        throw std::invalid_argument("observed_order: refinement ratio must exceed 1");
    return std::log(error_coarse / error_fine) / std::log(refinement_ratio);
}

struct ConvergenceRow {
    int level = 0;
    int n_cells = 0;
    double h = 0.0;  // nominal spacing 1/n_cells
    double l1_error = 0.0;
    double linf_error = 0.0;
    double l1_order = std::numeric_limits<double>::quiet_NaN();    // undefined on the first row
    double linf_order = std::numeric_limits<double>::quiet_NaN();  // undefined on the first row
    int linf_argmax = 0;                                           // 1-based cell attaining the max error
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;

    const ConvergenceRow& finest() const { return rows.back(); }
};

struct LevelErrors {
    int n_cells = 0;
    double l1 = 0.0;
    double linf = 0.0;
    int linf_argmax = 0;
};

inline ConvergenceTable build_table(const std::vector<LevelErrors>& levels) {
    if (levels.size() < 2) throw std::invalid_argument("build_table: need at least 2 refinement levels");
    ConvergenceTable table;
    table.rows.reserve(levels.size());
    for (std::size_t k = 0; k < levels.size(); ++k) {
        const LevelErrors& lv = levels[k];
        if (lv.n_cells < 1) throw std::invalid_argument("build_table: non-positive cell count");
        if (k > 0 && lv.n_cells != 2 * levels[k - 1].n_cells)
            throw std::invalid_argument("build_table: cell count must double per level, got " +
                                        std::to_string(levels[k - 1].n_cells) + " -> " + std::to_string(lv.n_cells));
        ConvergenceRow row;
        row.level = static_cast<int>(k);
        row.n_cells = lv.n_cells;
        row.h = 1.0 / lv.n_cells;
        row.l1_error = lv.l1;
        row.linf_error = lv.linf;
        row.linf_argmax = lv.linf_argmax;
        if (k > 0) {
            row.l1_order = observed_order(levels[k - 1].l1, lv.l1);
            row.linf_order = observed_order(levels[k - 1].linf, lv.linf);
        }
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace advord
