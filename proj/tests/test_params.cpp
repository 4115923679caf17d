#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "ag/params.hpp"
#include "ag/random.hpp"
#include "test_util.hpp"

using namespace ag;
using namespace agtest;

namespace {

// direct scan over all candidate values of h
int h_index_by_scan(const Graph& g) {
    int best = 0;
    for (int h = 0; h <= g.num_vertices(); ++h) {
        int cnt = 0;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (g.degree(v) >= h) ++cnt;
        if (cnt >= h) best = h;
    }
    return best;
}

// max over nonempty vertex subsets of the minimum internal degree
int degeneracy_by_subsets(const Graph& g) {
    int n = g.num_vertices();
    int best = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int min_deg = n;
        for (int v = 0; v < n; ++v) {
            if (!(mask >> v & 1)) continue;
            int d = 0;
            for (int u : g.neighbors(v))
                if (mask >> u & 1) ++d;
            min_deg = std::min(min_deg, d);
        }
        best = std::max(best, min_deg);
    }
    return best;
}

int min_internal_degree(const Graph& g, const VertexSet& s) {
    int best = g.num_vertices();
    for (int v : s) {
        int d = 0;
        for (int u : g.neighbors(v))
            if (std::binary_search(s.begin(), s.end(), u)) ++d;
        best = std::min(best, d);
    }
    return best;
}

int clique_by_enumeration(const Graph& g) {
    int n = g.num_vertices();
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> pick;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) pick.push_back(v);
        bool clique = true;
        for (size_t i = 0; i < pick.size() && clique; ++i)
            for (size_t j = i + 1; j < pick.size(); ++j)
                if (!g.has_edge(pick[i], pick[j])) {
                    clique = false;
                    break;
                }
        if (clique) best = std::max(best, static_cast<int>(pick.size()));
    }
    return best;
}

// width of the best elimination order, by full permutation enumeration
int treewidth_by_orders(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    int best = n;
    do {
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        for (int u = 0; u < n; ++u)
            for (int v : g.neighbors(u)) adj[u][v] = 1;
        std::vector<char> alive(n, 1);
        int width = 0;
        for (int v : order) {
            std::vector<int> nb;
            for (int u = 0; u < n; ++u)
                if (alive[u] && adj[v][u]) nb.push_back(u);
            width = std::max(width, static_cast<int>(nb.size()));
            if (width >= best) break;
            alive[v] = 0;
            for (size_t i = 0; i < nb.size(); ++i)
                for (size_t j = i + 1; j < nb.size(); ++j)
                    adj[nb[i]][nb[j]] = adj[nb[j]][nb[i]] = 1;
        }
        best = std::min(best, width);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

}  // namespace

TEST_CASE("h-index on fixed graphs") {
    CHECK(h_index(complete_graph(4)).value == 3);
    CHECK(h_index(star_graph(3)).value == 1);
    CHECK(h_index(petersen_graph()).value == 3);
    CHECK(h_index(build_graph(4, {})).value == 0);

    HIndex h = h_index(petersen_graph());
    CHECK(h.witness.size() == 3);
    for (int v : h.witness) CHECK(petersen_graph().degree(v) >= h.value);
}

TEST_CASE("h-index matches direct scan") {
    Rng rng(29);
    for (int i = 0; i < 120; ++i) {
        Graph g = erdos_renyi(rng, 1 + static_cast<int>(rng() % 10), 0.4);
        CHECK(h_index(g).value == h_index_by_scan(g));
    }
}

TEST_CASE("degeneracy core on fixed graphs") {
    // forests with at least one edge are 1-degenerate, whole tree survives
    Graph tree = path_graph(5);
    CoreDecomposition cd = degeneracy_core(tree);
    CHECK(cd.degeneracy == 1);
    CHECK(min_internal_degree(tree, cd.core) >= 1);

    CoreDecomposition c5 = degeneracy_core(cycle_graph(5));
    CHECK(c5.degeneracy == 2);
    CHECK(c5.core == VertexSet{0, 1, 2, 3, 4});

    // K4 plus a pendant: the core is exactly the K4
    Graph k4p = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    CoreDecomposition k = degeneracy_core(k4p);
    CHECK(k.degeneracy == 3);
    CHECK(k.core == VertexSet{0, 1, 2, 3});
    CHECK(min_internal_degree(k4p, k.core) == 3);
}

TEST_CASE("degeneracy matches subset enumeration and the core attains it") {
    Rng rng(31);
    for (int i = 0; i < 80; ++i) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = erdos_renyi(rng, n, 0.4);
        CoreDecomposition cd = degeneracy_core(g);
        CHECK(cd.degeneracy == degeneracy_by_subsets(g));
        CHECK(min_internal_degree(g, cd.core) >= cd.degeneracy);
        if (g.num_edges() > 0)
            CHECK(static_cast<int>(cd.core.size()) >= cd.degeneracy + 1);
        // elimination order is a permutation
        VertexSet order = cd.elimination_order;
        std::sort(order.begin(), order.end());
        for (int v = 0; v < n; ++v) CHECK(order[v] == v);
    }
}

TEST_CASE("degree profile") {
    CHECK(degree_profile(star_graph(3)) == std::pair<int, int>{1, 3});
    CHECK(degree_profile(cycle_graph(5)) == std::pair<int, int>{2, 2});
    CHECK(degree_profile(complete_graph(4)) == std::pair<int, int>{3, 3});
    CHECK_THROWS_AS(degree_profile(build_graph(0, {})), input_error);
}

TEST_CASE("clique number on fixed graphs") {
    CHECK(clique_number(cycle_graph(5)).size == 2);
    CHECK(clique_number(complete_graph(4)).size == 4);
    CHECK(clique_number(complement(cycle_graph(5))).size == 2);
    CHECK(clique_number(build_graph(3, {})).size == 1);
    CHECK(clique_number(build_graph(0, {})).size == 0);
    CHECK_THROWS_AS(clique_number(complete_graph(10), 9), capacity_error);
}

TEST_CASE("clique number matches enumeration and witness is a clique") {
    Rng rng(37);
    for (int i = 0; i < 80; ++i) {
        Graph g = erdos_renyi(rng, 1 + static_cast<int>(rng() % 12), 0.5);
        CliqueWitness w = clique_number(g);
        CHECK(w.size == clique_by_enumeration(g));
        CHECK(static_cast<int>(w.clique.size()) == w.size);
        for (size_t a = 0; a < w.clique.size(); ++a)
            for (size_t b = a + 1; b < w.clique.size(); ++b)
                CHECK(g.has_edge(w.clique[a], w.clique[b]));
    }
}

TEST_CASE("treewidth on fixed graphs") {
    CHECK(treewidth_exact(path_graph(2)) == 1);
    CHECK(treewidth_exact(path_graph(6)) == 1);
    CHECK(treewidth_exact(cycle_graph(5)) == 2);
    CHECK(treewidth_exact(grid_graph(3, 3)) == 3);
    CHECK(treewidth_exact(complete_graph(6)) == 5);
    CHECK(treewidth_exact(build_graph(3, {})) == 0);
    CHECK_THROWS_AS(treewidth_exact(grid_graph(5, 5)), capacity_error);  // default guard is 24
}

TEST_CASE("treewidth of the 3x3 grid confirmed by order enumeration") {
    CHECK(treewidth_by_orders(grid_graph(3, 3)) == 3);
}

TEST_CASE("treewidth matches order enumeration on random graphs") {
    Rng rng(41);
    for (int i = 0; i < 25; ++i) {
        Graph g = erdos_renyi(rng, 1 + static_cast<int>(rng() % 7), 0.45);
        CHECK(treewidth_exact(g) == treewidth_by_orders(g));
    }
}
