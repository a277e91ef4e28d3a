#pragma once

// Named study presets. Each returns a fully validated CaseConfig; the CLI
// exposes them via --preset and `list-presets`.

#include <string>
#include <vector>

#include "advord/config.hpp"

namespace advord {

struct PresetInfo {
    std::string name;
    std::string summary;
};

inline std::vector<PresetInfo> preset_catalog() {
    return {
        {"fig1b", "steady solve, regular and irregular grids, N = 8 .. 256"},
        {"fig1c", "source-only time marching (residual off), dt = 0.01 h, regular grid"},
        {"fig1de", "full unsteady march, one step of dt = 1e-8 on every level"},
        {"scaled_dt_pitfall", "full unsteady march, dt = 0.01 h refined with the grid, fixed final time"},
        {"fig2", "dt = 0.95 h with the final time tied to the coarsest-level dt"},
        {"exp_tables", "exponential damping factor tables"},
    };
}

inline CaseConfig preset_config(const std::string& name) {
    CaseConfig cfg;
    if (name == "fig1b") {
        cfg.experiment = Experiment::steady;
    } else if (name == "fig1c") {
        // T_f = 0.01 h_coarsest with dt = 0.01 h: one step on the coarsest
        // level, 2^k steps on level k.
        cfg.experiment = Experiment::ode_time;
        cfg.grid = GridChoice::regular;
        cfg.mu = 0.01;
    } else if (name == "fig1de") {
        cfg.experiment = Experiment::unsteady_fixed_dt;
        cfg.dt_fixed = 1e-8;
        cfg.t_final = 1e-8;
        cfg.t_final_explicit = true;
    } else if (name == "scaled_dt_pitfall") {
        // Same step schedule as fig1c but with the advective residual active.
        cfg.experiment = Experiment::unsteady_scaled_dt;
        cfg.mu = 0.01;
    } else if (name == "fig2") {
        cfg.experiment = Experiment::remedy;
        cfg.mu = 0.95;
    } else if (name == "exp_tables") {
        cfg.experiment = Experiment::factor_tables;
    } else {
        throw ConfigError("unknown preset '" + name + "' (see `verify list-presets`)");
    }
    return cfg;
}

}  // namespace advord
