#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "advord/grid.hpp"

using namespace advord;

namespace {

// Partition invariants every grid must satisfy; the volume sum is compensated
// so the 1e-14 bound is about the grid, not about summation order.
void check_partition(const Grid1D& g, double perturb_fraction) {
    REQUIRE(g.n_cells >= 4);
    REQUIRE(static_cast<int>(g.faces.size()) == g.n_cells + 1);
    REQUIRE(static_cast<int>(g.centers.size()) == g.n_cells);
    REQUIRE(static_cast<int>(g.volumes.size()) == g.n_cells);
    REQUIRE(g.faces.front() == 0.0);
    REQUIRE(g.faces.back() == 1.0);
    const double h = 1.0 / g.n_cells;
    double sum = 0.0, comp = 0.0;
    for (int j = 0; j < g.n_cells; ++j) {
        REQUIRE(g.faces[j] < g.faces[j + 1]);
        REQUIRE(g.volumes[j] > 0.0);
        REQUIRE(g.volumes[j] == g.faces[j + 1] - g.faces[j]);
        REQUIRE(g.centers[j] == 0.5 * (g.faces[j] + g.faces[j + 1]));
        // Perturbing each face by at most r h leaves every cell at least
        // (1 - 2r) h wide.
        REQUIRE(g.volumes[j] >= (1.0 - 2.0 * perturb_fraction) * h - 1e-15);
        const double y = g.volumes[j] - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    REQUIRE(std::abs(sum - 1.0) <= 1e-14);
}

}  // namespace

TEST_CASE("LCG advances state before extracting bits", "[grid]") {
    detail::Lcg gen(0);
    REQUIRE(gen.next_unit() == 0.07820865487829387);
    REQUIRE(gen.state == 1442695040888963407ULL);

    detail::Lcg gen42(42);
    REQUIRE(gen42.next_unit() == 0.5682303266439076);
    REQUIRE(gen42.next_unit() == 0.2254634289477513);
    REQUIRE(gen42.next_unit() == 0.41283831882951183);
}

TEST_CASE("regular grid faces are exact multiples of h", "[grid]") {
    const Grid1D g = make_regular(8);
    REQUIRE(g.n_cells == 8);
    const double h = 1.0 / 8;
    for (int i = 0; i <= 8; ++i) REQUIRE(g.faces[i] == i * h);
    for (int j = 0; j < 8; ++j) {
        REQUIRE(g.volumes[j] == h);  // dyadic h: differences are exact
        REQUIRE(g.centers[j] == (j + 0.5) * h);
    }
    check_partition(g, 0.0);
    check_partition(make_regular(10), 0.0);
    check_partition(make_regular(37), 0.0);
}

TEST_CASE("irregular grid reproduces its fixed fixture bit for bit", "[grid]") {
    const std::vector<double> expected{0.0,
                                       0.13011727449829308,
                                       0.22940975717108134,
                                       0.3684628739122134,
                                       0.5097798537379699,
                                       0.6385110855431587,
                                       0.7144671683024953,
                                       0.839132060248332,
                                       1.0};
    const Grid1D g = make_irregular(8, 42, 0.3);
    REQUIRE(g.faces == expected);

    const std::vector<double> expected2{0.0, 0.24847276003882662, 0.6025233961411893, 0.841479559948338, 1.0};
    REQUIRE(make_irregular(4, 7, 0.45).faces == expected2);
}

TEST_CASE("zero perturbation reproduces the regular grid bit for bit", "[grid]") {
    for (int n : {4, 8, 10, 37}) {
        const Grid1D reg = make_regular(n);
        const Grid1D irr = make_irregular(n, 12345, 0.0);
        REQUIRE(irr.faces == reg.faces);
        REQUIRE(irr.centers == reg.centers);
        REQUIRE(irr.volumes == reg.volumes);
    }
}

TEST_CASE("irregular grids satisfy the partition invariants", "[grid]") {
    // Broad sweep over seeds, sizes, and perturbation strengths.
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const int n = 4 + static_cast<int>(seed % 61);
        const double r = (seed % 2) ? 0.3 : 0.45;
        check_partition(make_irregular(n, seed, r), r);
    }
    check_partition(make_irregular(256, 9001, 0.45), 0.45);
}

TEST_CASE("same seed means same grid, different seed means different grid", "[grid]") {
    const Grid1D g1 = make_irregular(16, 77, 0.3);
    const Grid1D g2 = make_irregular(16, 77, 0.3);
    REQUIRE(g1.faces == g2.faces);
    REQUIRE(g1.faces != make_irregular(16, 78, 0.3).faces);
}

TEST_CASE("grid constructors reject bad arguments", "[grid]") {
    REQUIRE_THROWS_AS(make_regular(3), std::invalid_argument);
    REQUIRE_THROWS_AS(make_regular(0), std::invalid_argument);
    REQUIRE_THROWS_AS(make_irregular(3, 1, 0.3), std::invalid_argument);
    REQUIRE_THROWS_AS(make_irregular(8, 1, -0.1), std::invalid_argument);
    REQUIRE_THROWS_AS(make_irregular(8, 1, 0.46), std::invalid_argument);
    REQUIRE_THROWS_AS(grid_family(GridKind::regular, 8, 1, 0, 0.0), std::invalid_argument);
}

TEST_CASE("grid family doubles cells and reseeds per level", "[grid]") {
    const std::vector<Grid1D> fam = grid_family(GridKind::irregular, 8, 4, 100, 0.3);
    REQUIRE(fam.size() == 4);
    for (int k = 0; k < 4; ++k) {
        REQUIRE(fam[k].n_cells == 8 << k);
        REQUIRE(fam[k].faces == make_irregular(8 << k, 100 + k, 0.3).faces);
    }
    const std::vector<Grid1D> reg = grid_family(GridKind::regular, 4, 3, 0, 0.0);
    for (int k = 0; k < 3; ++k) REQUIRE(reg[k].faces == make_regular(4 << k).faces);
}

TEST_CASE("face dump round-trips every coordinate exactly", "[grid]") {
    const Grid1D g = make_irregular(16, 5150, 0.45);
    std::ostringstream out;
    dump_faces(g, out);

    std::istringstream in(out.str());
    std::string line;
    std::vector<double> parsed;
    while (std::getline(in, line)) parsed.push_back(std::strtod(line.c_str(), nullptr));
    REQUIRE(parsed == g.faces);
}
