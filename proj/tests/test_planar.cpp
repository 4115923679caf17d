#include <doctest.h>

#include "ag/oracles.hpp"
#include "ag/planar.hpp"
#include "ag/random.hpp"
#include "ag/vc.hpp"
#include "test_util.hpp"

using namespace ag;
using namespace agtest;

TEST_CASE("planarity on fixed graphs") {
    CHECK(check_planar(complete_graph(4)).planar);
    CHECK(check_planar(grid_graph(4, 4)).planar);
    CHECK(check_planar(build_graph(0, {})).planar);
    Planarity k5 = check_planar(complete_graph(5));
    CHECK_FALSE(k5.planar);
    CHECK_FALSE(k5.kuratowski.empty());
    CHECK_FALSE(check_planar(complete_graph(6)).planar);
    CHECK_FALSE(check_planar(petersen_graph()).planar);
}

TEST_CASE("random stacked triangulations are planar") {
    Rng rng(79);
    for (int i = 0; i < 40; ++i) {
        Graph g = random_planar(rng, 3 + static_cast<int>(rng() % 18), 0.8);
        CHECK(check_planar(g).planar);
    }
}

TEST_CASE("grid cover lower bound formula") {
    CHECK(grid_vc_lower_bound(0) == 0);
    CHECK(grid_vc_lower_bound(3) == 0);
    CHECK(grid_vc_lower_bound(9) == 1);
    CHECK(grid_vc_lower_bound(27) == 10);
    CHECK_THROWS_AS(grid_vc_lower_bound(-1), input_error);
}

TEST_CASE("planar width mode on fixed instances") {
    // 5x5 grid: treewidth 5, bound never rejects at this scale, cover number 12
    Graph g55 = grid_graph(5, 5);
    PlanarVcResult r = vc_above_treewidth_planar(g55, 5, {}, 25);
    CHECK(r.report.treewidth == 5);
    CHECK(r.report.vc_lower_bound == 0);
    CHECK_FALSE(r.report.rejected);
    CHECK_FALSE(r.result.feasible);  // needs 12
    CHECK(vc_above_treewidth_planar(g55, 12, {}, 25).result.feasible);

    PlanarVcResult k4 = vc_above_treewidth_planar(complete_graph(4), 0);
    CHECK(k4.report.treewidth == 3);
    CHECK_FALSE(k4.result.feasible);

    // whole vertex set always covers
    PlanarVcResult all = vc_above_treewidth_planar(grid_graph(3, 3), 9);
    CHECK_FALSE(all.report.rejected);
    CHECK(all.result.feasible);

    CHECK_THROWS_AS(vc_above_treewidth_planar(complete_graph(5), 3), input_error);
    CHECK_THROWS_AS(vc_above_treewidth_planar(grid_graph(5, 5), 3), capacity_error);
}

TEST_CASE("width-derived bound stays below the cover number") {
    Rng rng(83);
    for (int i = 0; i < 40; ++i) {
        Graph g = random_planar(rng, 3 + static_cast<int>(rng() % 18), 0.7);
        int tw = treewidth_exact(g);
        int beta_lb = (2 * (tw + 1) + 2) / 3;
        CHECK(grid_vc_lower_bound(beta_lb) <= vc_optimum(g).size);
    }
}

TEST_CASE("planar mode decision equals the plain solver") {
    Rng rng(89);
    for (int i = 0; i < 30; ++i) {
        int n = 3 + static_cast<int>(rng() % 10);
        Graph g = random_planar(rng, n, 0.7);
        for (int k = 0; k <= n; ++k) {
            PlanarVcResult r = vc_above_treewidth_planar(g, k);
            CHECK(r.result.feasible == vc_decide(g, k).feasible);
            if (r.report.rejected) CHECK_FALSE(vc_decide(g, k).feasible);
        }
    }
}

TEST_CASE("grid cover anchors") {
    CHECK(vc_optimum(grid_graph(2, 2)).size == 2);
    CHECK(vc_optimum(grid_graph(3, 3)).size == 4);
    CHECK(vc_optimum(grid_graph(4, 4)).size == 8);
    CHECK(vc_optimum(grid_graph(5, 5)).size == 12);
    for (int g = 2; g <= 5; ++g)
        CHECK(vc_optimum(grid_graph(g, g)).size >= g * (g / 2));
}
