#pragma once

// Experiment driver: expands a CaseConfig into per-level solves, assembles
// the convergence table, and writes the output files.

#include <array>
#include <cstdint>
#include <filesystem>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "advord/analysis.hpp"
#include "advord/config.hpp"
#include "advord/emit.hpp"
#include "advord/grid.hpp"
#include "advord/manufactured.hpp"
#include "advord/march.hpp"
#include "advord/scheme.hpp"

namespace advord {

// Runs one grid-refinement study for a config with a concrete grid kind.
// Level k uses base_cells * 2^k cells; irregular levels draw from seed + k so
// every level's perturbation is independent of the others.
inline ConvergenceTable run_experiment(const CaseConfig& cfg) {
    if (cfg.experiment == Experiment::factor_tables)
        throw std::invalid_argument("run_experiment: factor_tables is not a convergence study");
    const GridKind kind = to_grid_kind(cfg.grid);
    const ProblemSpec spec(cfg.a);
    const double t_final = resolve_t_final(cfg);

    std::vector<LevelErrors> levels;
    levels.reserve(static_cast<std::size_t>(cfg.n_levels));
    for (int k = 0; k < cfg.n_levels; ++k) {
        const int n = cfg.base_cells << k;
        try {
            const Grid1D grid = (kind == GridKind::regular)
                                    ? make_regular(n)
                                    : make_irregular(n, cfg.seed + static_cast<std::uint64_t>(k),
                                                     cfg.perturb_fraction);
            SolutionField u;
            if (cfg.experiment == Experiment::steady) {
                u = steady_solve(spec, grid);
            } else {
                const double h = 1.0 / n;
                const double dt =
                    cfg.experiment == Experiment::unsteady_fixed_dt ? cfg.dt_fixed : cfg.mu * h / cfg.a;
                const MarchMode mode =
                    cfg.experiment == Experiment::ode_time ? MarchMode::ode_only : MarchMode::full;
                u = integrate(spec, grid, t_final, dt, mode);
            }
            const LinfResult linf = linf_error(u, u.time);
            levels.push_back({n, l1_error(u, u.time), linf.value, linf.argmax_cell});
        } catch (const std::exception& e) {
            throw std::runtime_error("level " + std::to_string(k) + " (N = " + std::to_string(n) + "): " + e.what());
        }
    }
    return build_table(levels);
}

struct ExperimentRun {
    GridKind kind = GridKind::regular;
    ConvergenceTable table;
    std::array<NormVerdict, 2> verdicts;
    bool pass = false;
};

struct CaseResult {
    std::vector<ExperimentRun> runs;
    std::vector<std::string> files;  // paths written, in write order
    bool bands_ok = true;
};

// Runs the configured case end to end: expands grid = both into one run per
// kind, writes the CSV / .dat / report triple for each run (or factors.txt
// for the factor tables), and reports whether every final-pair order landed
// inside its expected band.
inline CaseResult run_case(const CaseConfig& cfg, bool dump_grids = false) {
    namespace fs = std::filesystem;
    CaseResult result;
    const fs::path out_dir(cfg.output_dir);
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory '" + out_dir.string() + "': " + ec.message());

    if (cfg.experiment == Experiment::factor_tables) {
        const fs::path path = out_dir / "factors.txt";
        detail::write_text_file(path, factor_tables_text());
        result.files.push_back(path.string());
        return result;
    }

    std::vector<GridKind> kinds;
    if (cfg.grid == GridChoice::both)
        kinds = {GridKind::regular, GridKind::irregular};
    else
        kinds = {to_grid_kind(cfg.grid)};

    for (const GridKind kind : kinds) {
        CaseConfig sub = cfg;
        sub.grid = kind == GridKind::regular ? GridChoice::regular : GridChoice::irregular;

        ExperimentRun run;
        run.kind = kind;
        run.table = run_experiment(sub);
        run.verdicts = final_verdicts(run.table, cfg.experiment, kind);
        run.pass = run.verdicts[0].pass && run.verdicts[1].pass;
        result.bands_ok = result.bands_ok && run.pass;

        const std::string base = std::string(to_string(cfg.experiment)) + "_" + to_string(kind);
        const fs::path csv_path = out_dir / (base + ".csv");
        detail::write_text_file(csv_path, csv_text(run.table));
        result.files.push_back(csv_path.string());

        const fs::path dat_path = out_dir / (base + ".dat");
        detail::write_text_file(dat_path, dat_text(run.table));
        result.files.push_back(dat_path.string());

        const fs::path report_path = out_dir / (base + "_report.txt");
        detail::write_text_file(report_path, report_text(sub, kind, run.table, run.verdicts));
        result.files.push_back(report_path.string());

        if (dump_grids) {
            for (int k = 0; k < cfg.n_levels; ++k) {
                const int n = cfg.base_cells << k;
                const Grid1D grid = (kind == GridKind::regular)
                                        ? make_regular(n)
                                        : make_irregular(n, cfg.seed + static_cast<std::uint64_t>(k),
                                                         cfg.perturb_fraction);
                std::ostringstream faces;
                dump_faces(grid, faces);
                const fs::path grid_path =
                    out_dir / ("faces_" + base + "_level" + std::to_string(k) + ".txt");
                detail::write_text_file(grid_path, faces.str());
                result.files.push_back(grid_path.string());
            }
        }
        result.runs.push_back(std::move(run));
    }
    return result;
}

}  // namespace advord
