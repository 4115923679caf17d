#include <doctest.h>

#include "ag/oracles.hpp"
#include "ag/random.hpp"
#include "test_util.hpp"

using namespace ag;
using namespace agtest;

TEST_CASE("vertex cover oracle") {
    CHECK(brute_min_vertex_cover(cycle_graph(5)).value == 3);
    CHECK(brute_min_vertex_cover(complete_graph(4)).value == 3);
    CHECK(brute_min_vertex_cover(build_graph(4, {})).value == 0);
    // lexicographically smallest witness of minimum size
    CHECK(brute_min_vertex_cover(path_graph(3)).witness == VertexSet{1});
    CHECK(brute_min_vertex_cover(cycle_graph(4)).witness == VertexSet{0, 2});
}

TEST_CASE("independent set oracle") {
    CHECK(brute_max_independent_set(cycle_graph(5)).value == 2);
    CHECK(brute_max_independent_set(complete_graph(4)).value == 1);
    CHECK(brute_max_independent_set(build_graph(5, {})).value == 5);
}

TEST_CASE("feedback vertex set oracle") {
    CHECK(brute_min_fvs(cycle_graph(5)).value == 1);
    CHECK(brute_min_fvs(path_graph(6)).value == 0);
    CHECK(brute_min_fvs(complete_graph(4)).value == 2);
    CHECK(brute_min_fvs(petersen_graph()).value == 3);
}

TEST_CASE("cluster deletion oracle") {
    CHECK(brute_cluster_deletion_number(path_graph(3)).value == 1);
    CHECK(brute_cluster_deletion_number(disjoint_union(complete_graph(3), complete_graph(2))).value == 0);
    CHECK(brute_cluster_deletion_number(cycle_graph(5)).value == 2);
}

TEST_CASE("distance to Kr-free oracle") {
    CHECK(brute_distance_to_kr_free(complete_graph(4), 3).value == 2);
    CHECK(brute_distance_to_kr_free(cycle_graph(5), 3).value == 0);
    CHECK(brute_distance_to_kr_free(disjoint_union(complete_graph(3), complete_graph(3)), 3).value == 2);
    CHECK(brute_distance_to_kr_free(complete_graph(5), 4).value == 1);
    CHECK_THROWS_AS(brute_distance_to_kr_free(complete_graph(4), 2), input_error);
}

TEST_CASE("capacity guards are errors") {
    OracleConfig tiny;
    tiny.enum_limit = 4;
    tiny.vc_bb_limit = 5;
    CHECK_THROWS_AS(brute_min_vertex_cover(cycle_graph(6), tiny), capacity_error);
    CHECK_THROWS_AS(brute_max_independent_set(cycle_graph(6), tiny), capacity_error);
    CHECK_THROWS_AS(brute_min_fvs(cycle_graph(6), tiny), capacity_error);
    OracleConfig starved;
    starved.subset_budget = 3;
    CHECK_THROWS_AS(brute_min_fvs(complete_graph(6), starved), capacity_error);
}

TEST_CASE("cross-oracle identities on random graphs") {
    Rng rng(43);
    for (int i = 0; i < 60; ++i) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = erdos_renyi(rng, n, 0.4);
        int vc = brute_min_vertex_cover(g).value;
        int is = brute_max_independent_set(g).value;
        int fvs = brute_min_fvs(g).value;
        int cvd = brute_cluster_deletion_number(g).value;
        int dist = brute_distance_to_kr_free(g, 3).value;
        CHECK(is + vc == n);
        CHECK(fvs <= vc);
        CHECK(cvd <= vc);
        CHECK(dist <= fvs);
    }
}

TEST_CASE("tier-2 searches agree with enumeration") {
    Rng rng(47);
    OracleConfig force_bb;
    force_bb.enum_limit = -1;
    force_bb.cvd_enum_limit = -1;
    for (int i = 0; i < 120; ++i) {
        Graph g = erdos_renyi(rng, 1 + static_cast<int>(rng() % 12), 0.45);
        CHECK(brute_min_vertex_cover(g, force_bb).value == brute_min_vertex_cover(g).value);
        CHECK(brute_cluster_deletion_number(g, force_bb).value ==
              brute_cluster_deletion_number(g).value);
    }
}

TEST_CASE("capped enumeration decides without the full-size guard") {
    Graph pet = petersen_graph();
    CHECK_FALSE(brute_min_vertex_cover_capped(pet, 5).has_value());
    auto vc6 = brute_min_vertex_cover_capped(pet, 6);
    REQUIRE(vc6.has_value());
    CHECK(vc6->value == 6);
    CHECK_FALSE(brute_min_fvs_capped(pet, 2).has_value());
    CHECK(brute_min_fvs_capped(pet, 3)->value == 3);
}
