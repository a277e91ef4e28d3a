#pragma once

// Experiment configuration: the typed case description, the line-oriented
// `key = value` config-file parser, and the validation that rejects keys a
// given experiment does not use.

#include <cctype>
#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>

#include "advord/grid.hpp"

namespace advord {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Experiment {
    steady,              // direct steady solve per level
    ode_time,            // du/dt = s only, residual off; isolates time accuracy
    unsteady_fixed_dt,   // constant dt and explicit t_final on every level
    unsteady_scaled_dt,  // dt = mu h / a refined with the grid
    remedy,              // dt = mu h / a with t_final tied to the coarsest dt
    factor_tables,       // print the exponential damping factor tables
};

inline const char* to_string(Experiment e) {
    switch (e) {
        case Experiment::steady: return "steady";
        case Experiment::ode_time: return "ode_time";
        case Experiment::unsteady_fixed_dt: return "unsteady_fixed_dt";
        case Experiment::unsteady_scaled_dt: return "unsteady_scaled_dt";
        case Experiment::remedy: return "remedy";
        case Experiment::factor_tables: return "factor_tables";
    }
    return "?";
}

inline Experiment parse_experiment(const std::string& s) {
    if (s == "steady") return Experiment::steady;
    if (s == "ode_time") return Experiment::ode_time;
    if (s == "unsteady_fixed_dt") return Experiment::unsteady_fixed_dt;
    if (s == "unsteady_scaled_dt") return Experiment::unsteady_scaled_dt;
    if (s == "remedy") return Experiment::remedy;
    if (s == "factor_tables") return Experiment::factor_tables;
    throw ConfigError("unknown experiment '" + s +
                      "' (expected steady, ode_time, unsteady_fixed_dt, unsteady_scaled_dt, remedy, or factor_tables)");
}

enum class GridChoice { regular, irregular, both };

inline const char* to_string(GridChoice g) {
    switch (g) {
        case GridChoice::regular: return "regular";
        case GridChoice::irregular: return "irregular";
        case GridChoice::both: return "both";
    }
    return "?";
}

inline GridChoice parse_grid_choice(const std::string& s) {
    if (s == "regular") return GridChoice::regular;
    if (s == "irregular") return GridChoice::irregular;
    if (s == "both") return GridChoice::both;
    throw ConfigError("unknown grid kind '" + s + "' (expected regular, irregular, or both)");
}

inline GridKind to_grid_kind(GridChoice g) {
    if (g == GridChoice::regular) return GridKind::regular;
    if (g == GridChoice::irregular) return GridKind::irregular;
    throw std::invalid_argument("to_grid_kind: 'both' must be expanded into concrete kinds first");
}

struct CaseConfig {
    Experiment experiment = Experiment::steady;
    double a = 1.0;
    GridChoice grid = GridChoice::both;
    int base_cells = 8;
    int n_levels = 6;
    std::uint64_t seed = 314;
    double perturb_fraction = 0.3;
    double dt_fixed = 0.0;           // unsteady_fixed_dt only
    double mu = 0.0;                 // ode_time / unsteady_scaled_dt / remedy only
    bool t_final_explicit = false;   // true: t_final holds the value
    double t_final = 0.0;            // explicit final time
    double t_final_multiple = 1.0;   // otherwise T_f = multiple * (mu h_coarsest / a)
    std::string output_dir = "verify_out";
};

// Final time a config resolves to on its coarsest level (0 for experiments
// without time marching).
inline double resolve_t_final(const CaseConfig& cfg) {
    switch (cfg.experiment) {
        case Experiment::steady:
        case Experiment::factor_tables:
            return 0.0;
        case Experiment::unsteady_fixed_dt:
            return cfg.t_final;
        default:
            break;
    }
    if (cfg.t_final_explicit) return cfg.t_final;
    const double h_coarsest = 1.0 / cfg.base_cells;
    return cfg.t_final_multiple * (cfg.mu * h_coarsest / cfg.a);
}

using KeyValueMap = std::map<std::string, std::string>;

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline double parse_double_value(const std::string& key, const std::string& value) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE)
        throw ConfigError("key '" + key + "': '" + value + "' is not a number");
    return v;
}

inline long parse_int_value(const std::string& key, const std::string& value) {
    errno = 0;
    char* end = nullptr;
    const long v = std::strtol(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE)
        throw ConfigError("key '" + key + "': '" + value + "' is not an integer");
    return v;
}

inline std::uint64_t parse_uint64_value(const std::string& key, const std::string& value) {
    if (!value.empty() && value[0] == '-') throw ConfigError("key '" + key + "': seed must be non-negative");
    errno = 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE)
        throw ConfigError("key '" + key + "': '" + value + "' is not an unsigned integer");
    return v;
}

}  // namespace detail

// Reads `key = value` lines; '#' starts a comment, blank lines are skipped,
// duplicate keys are rejected.
inline KeyValueMap parse_config_text(std::istream& in) {
    KeyValueMap kv;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = detail::trim(line);
        if (stripped.empty()) continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value', got '" + stripped + "'");
        const std::string key = detail::trim(stripped.substr(0, eq));
        const std::string value = detail::trim(stripped.substr(eq + 1));
        if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
        if (value.empty()) throw ConfigError("line " + std::to_string(line_no) + ": key '" + key + "' has no value");
        if (!kv.emplace(key, value).second)
            throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
    return kv;
}

// Builds a validated CaseConfig. Only the keys the selected experiment uses
// are accepted; anything else is a configuration error, not a silent default.
inline CaseConfig build_config(const KeyValueMap& kv) {
    const auto it = kv.find("experiment");
    if (it == kv.end()) throw ConfigError("missing required key 'experiment'");

    CaseConfig cfg;
    cfg.experiment = parse_experiment(it->second);

    const bool is_study = cfg.experiment != Experiment::factor_tables;
    const bool scaled_dt = cfg.experiment == Experiment::ode_time ||
                           cfg.experiment == Experiment::unsteady_scaled_dt ||
                           cfg.experiment == Experiment::remedy;
    const bool fixed_dt = cfg.experiment == Experiment::unsteady_fixed_dt;

    for (const auto& [key, value] : kv) {
        if (key == "experiment") continue;
        if (key == "out") {
            cfg.output_dir = value;
        } else if (key == "grid" && is_study) {
            cfg.grid = parse_grid_choice(value);
        } else if (key == "a" && is_study) {
            cfg.a = detail::parse_double_value(key, value);
            if (!(cfg.a > 0.0)) throw ConfigError("key 'a': advection speed must be positive");
        } else if (key == "base_cells" && is_study) {
            const long n = detail::parse_int_value(key, value);
            if (n < 4 || n > (1L << 24)) throw ConfigError("key 'base_cells': must lie in [4, 2^24]");
            cfg.base_cells = static_cast<int>(n);
        } else if (key == "levels" && is_study) {
            const long n = detail::parse_int_value(key, value);
            if (n < 2 || n > 24) throw ConfigError("key 'levels': must lie in [2, 24]");
            cfg.n_levels = static_cast<int>(n);
        } else if (key == "seed" && is_study) {
            cfg.seed = detail::parse_uint64_value(key, value);
        } else if (key == "perturb_fraction" && is_study) {
            cfg.perturb_fraction = detail::parse_double_value(key, value);
            if (!(cfg.perturb_fraction >= 0.0 && cfg.perturb_fraction <= 0.45))
                throw ConfigError("key 'perturb_fraction': must lie in [0, 0.45]");
        } else if (key == "dt" && fixed_dt) {
            cfg.dt_fixed = detail::parse_double_value(key, value);
            if (!(cfg.dt_fixed > 0.0)) throw ConfigError("key 'dt': must be positive");
        } else if (key == "mu" && scaled_dt) {
            cfg.mu = detail::parse_double_value(key, value);
            if (!(cfg.mu > 0.0 && cfg.mu <= 1.0)) throw ConfigError("key 'mu': must lie in (0, 1]");
        } else if (key == "tf" && (fixed_dt || scaled_dt)) {
            cfg.t_final = detail::parse_double_value(key, value);
            if (!(cfg.t_final > 0.0)) throw ConfigError("key 'tf': must be positive");
            cfg.t_final_explicit = true;
        } else if (key == "tf_multiple" && scaled_dt) {
            cfg.t_final_multiple = detail::parse_double_value(key, value);
            if (!(cfg.t_final_multiple >= 1.0)) throw ConfigError("key 'tf_multiple': must be at least 1");
        } else {
            throw ConfigError("key '" + key + "' is not valid for experiment '" + to_string(cfg.experiment) + "'");
        }
    }

    if (fixed_dt) {
        if (cfg.dt_fixed == 0.0) throw ConfigError("experiment 'unsteady_fixed_dt' requires key 'dt'");
        if (!cfg.t_final_explicit) throw ConfigError("experiment 'unsteady_fixed_dt' requires key 'tf'");
    }
    if (scaled_dt) {
        if (cfg.mu == 0.0)
            throw ConfigError(std::string("experiment '") + to_string(cfg.experiment) + "' requires key 'mu'");
        if (cfg.t_final_explicit && kv.count("tf_multiple"))
            throw ConfigError("keys 'tf' and 'tf_multiple' are mutually exclusive");
    }
    return cfg;
}

inline CaseConfig parse_config(std::istream& in) { return build_config(parse_config_text(in)); }

}  // namespace advord
