#pragma once

// 1D finite-volume grids on [0,1]: regular partitions, reproducibly
// perturbed irregular partitions, and refinement families.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "advord/format.hpp"

namespace advord {

struct Grid1D {
    std::vector<double> faces;    // n_cells + 1 ascending coordinates, faces.front() = 0, faces.back() = 1
    std::vector<double> centers;  // midpoint of each cell's two faces
    std::vector<double> volumes;  // face differences, all positive
    int n_cells = 0;
};

namespace detail {

// 64-bit LCG; state advances first, then the top 53 bits give a uniform in [0,1).
// Fixed recipe so grids are bit-identical across platforms and languages.
struct Lcg {
    std::uint64_t state;

    explicit Lcg(std::uint64_t seed) : state(seed) {}

    double next_unit() {
        state = 6364136223846793005ULL * state + 1442695040888963407ULL;
        return static_cast<double>(state >> 11) / 9007199254740992.0;  // 2^53
    }
};

inline Grid1D grid_from_faces(std::vector<double> faces) {
    Grid1D g;
    g.n_cells = static_cast<int>(faces.size()) - 1;
    g.centers.resize(g.n_cells);
    g.volumes.resize(g.n_cells);
    for (int j = 0; j < g.n_cells; ++j) {
        g.centers[j] = 0.5 * (faces[j] + faces[j + 1]);
        g.volumes[j] = faces[j + 1] - faces[j];
    }
    g.faces = std::move(faces);
    return g;
}

inline void check_cell_count(int n_cells, const char* who) {
    if (n_cells < 4)
        throw std::invalid_argument(std::string(who) + ": need at least 4 cells (the upwind stencil reaches j-2), got " +
                                    std::to_string(n_cells));
}

}  // namespace detail

inline Grid1D make_regular(int n_cells) {
    detail::check_cell_count(n_cells, "make_regular");
    const double h = 1.0 / n_cells;
    std::vector<double> faces(n_cells + 1);
    faces[0] = 0.0;
    for (int i = 1; i < n_cells; ++i) faces[i] = i * h;
    faces[n_cells] = 1.0;
    return detail::grid_from_faces(std::move(faces));
}

// Each interior face of the regular grid is displaced by (2u - 1) * r * h with
// u drawn from the LCG, one draw per face, left to right. Boundary faces stay
// at 0 and 1. r <= 0.45 keeps all volumes positive.
inline Grid1D make_irregular(int n_cells, std::uint64_t seed, double perturb_fraction) {
    detail::check_cell_count(n_cells, "make_irregular");
    if (!(perturb_fraction >= 0.0 && perturb_fraction <= 0.45))
        throw std::invalid_argument("make_irregular: perturb_fraction must lie in [0, 0.45], got " +
                                    detail::fmt17(perturb_fraction));
    const double h = 1.0 / n_cells;
    detail::Lcg rng(seed);
    std::vector<double> faces(n_cells + 1);
    faces[0] = 0.0;
    for (int i = 1; i < n_cells; ++i) {
        const double u = rng.next_unit();
        faces[i] = i * h + (2.0 * u - 1.0) * perturb_fraction * h;
    }
    faces[n_cells] = 1.0;
    return detail::grid_from_faces(std::move(faces));
}

enum class GridKind { regular, irregular };

inline const char* to_string(GridKind kind) {
    return kind == GridKind::regular ? "regular" : "irregular";
}

// Level k holds base_cells * 2^k cells. Irregular levels are regenerated with
// seed + k so every level is genuinely irregular rather than a nested copy.
inline std::vector<Grid1D> grid_family(GridKind kind, int base_cells, int n_levels, std::uint64_t seed,
                                       double perturb_fraction) {
    if (n_levels < 2)
        throw std::invalid_argument("grid_family: need at least 2 levels, got " + std::to_string(n_levels));
    std::vector<Grid1D> levels;
    levels.reserve(n_levels);
    for (int k = 0; k < n_levels; ++k) {
        const int n = base_cells << k;
        if (kind == GridKind::regular)
            levels.push_back(make_regular(n));
        else
            levels.push_back(make_irregular(n, seed + static_cast<std::uint64_t>(k), perturb_fraction));
    }
    return levels;
}

// One face coordinate per line, full round-trip precision.
inline void dump_faces(const Grid1D& grid, std::ostream& out) {
    for (double f : grid.faces) out << detail::fmt17(f) << '\n';
}

}  // namespace advord
