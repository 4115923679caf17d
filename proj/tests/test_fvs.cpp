#include <doctest.h>

#include "ag/fvs.hpp"
#include "ag/oracles.hpp"
#include "ag/params.hpp"
#include "ag/random.hpp"
#include "test_util.hpp"

using namespace ag;
using namespace agtest;

namespace {

bool is_fvs(const Graph& g, const VertexSet& s) {
    return is_acyclic(delete_vertices(g, s).graph);
}

}  // namespace

TEST_CASE("reduce_fvs on fixed instances") {
    FvsReduction tree = reduce_fvs(path_graph(5), 0);
    CHECK(tree.graph.num_vertices() == 0);
    CHECK(tree.budget == 0);
    CHECK_FALSE(tree.infeasible);

    // a triangle forces one vertex and resolves within the reduction
    FvsReduction c3 = reduce_fvs(cycle_graph(3), 1);
    CHECK(c3.forced.size() == 1);
    CHECK(c3.budget == 0);
    CHECK(c3.graph.num_vertices() == 0);

    FvsReduction two_c4 = reduce_fvs(disjoint_union(cycle_graph(4), cycle_graph(4)), 1);
    CHECK(two_c4.infeasible);
}

TEST_CASE("fvs_decide on fixed instances") {
    CHECK_FALSE(fvs_decide(complete_graph(4), 1).feasible);
    CHECK(fvs_decide(complete_graph(4), 2).feasible);
    CHECK(fvs_decide(path_graph(6), 0).feasible);
    CHECK(fvs_decide(petersen_graph(), 3).feasible);
    CHECK_FALSE(fvs_decide(petersen_graph(), 2).feasible);
    CHECK_THROWS_AS(fvs_decide(cycle_graph(3), -1), input_error);
}

TEST_CASE("above-degeneracy branching on fixed instances") {
    BranchingResult c5 = fvs_above_degeneracy(cycle_graph(5), 1);
    CHECK(c5.guarantee == 2);
    CHECK(c5.ell == -1);
    CHECK(c5.result.feasible);
    CHECK(is_fvs(cycle_graph(5), *c5.result.certificate));

    BranchingResult forest = fvs_above_degeneracy(path_graph(5), 0);
    CHECK(forest.result.feasible);

    Graph k4p = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    BranchingResult kp = fvs_above_degeneracy(k4p, 2);
    CHECK(kp.guarantee == 3);
    CHECK(kp.result.feasible);
    CHECK(is_fvs(k4p, *kp.result.certificate));
    CHECK_FALSE(fvs_above_degeneracy(k4p, 1).result.feasible);
}

TEST_CASE("fvs solver agrees with enumeration on random instances") {
    Rng rng(67);
    for (int i = 0; i < 120; ++i) {
        int n = 1 + static_cast<int>(rng() % 10);
        double p = (i % 3 == 0) ? 0.2 : (i % 3 == 1 ? 0.5 : 0.8);
        Graph g = erdos_renyi(rng, n, p);
        int fvs = brute_min_fvs(g).value;
        for (int k = 0; k <= n; ++k) {
            SolveResult r = fvs_decide(g, k);
            REQUIRE(r.feasible == (k >= fvs));
            if (r.feasible) {
                REQUIRE(is_fvs(g, *r.certificate));
                REQUIRE(static_cast<int>(r.certificate->size()) <= k);
            }
        }
    }
}

TEST_CASE("reduction preserves the decision") {
    Rng rng(71);
    for (int i = 0; i < 80; ++i) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = erdos_renyi(rng, n, 0.4);
        for (int k = 0; k <= n; ++k) {
            FvsReduction red = reduce_fvs(g, k);
            bool via_reduction = !red.infeasible && fvs_decide(red.graph, red.budget).feasible;
            CHECK(via_reduction == fvs_decide(g, k).feasible);
        }
    }
}

TEST_CASE("degeneracy branching matches plain decisions with bounded subcalls") {
    Rng rng(73);
    for (int i = 0; i < 60; ++i) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = erdos_renyi(rng, n, 0.4);
        long long core = degeneracy_core(g).core.size();
        for (int k = 0; k <= n; ++k) {
            SolveResult plain = fvs_decide(g, k);
            BranchingResult above = fvs_above_degeneracy(g, k);
            REQUIRE(above.result.feasible == plain.feasible);
            for (int b : above.subcall_budgets) REQUIRE(b <= k - above.guarantee + 1);
            REQUIRE(above.cases_enumerated <= core * core + 1);
            if (above.result.feasible) {
                REQUIRE(is_fvs(g, *above.result.certificate));
                REQUIRE(static_cast<int>(above.result.certificate->size()) <= k);
            }
        }
    }
}
