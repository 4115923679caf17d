#ifndef AG_PARAMS_HPP
#define AG_PARAMS_HPP

#include <utility>

#include "ag/graph.hpp"

namespace ag {

// Result of min-degree elimination. The core is the suffix of the
// elimination order from the first vertex deleted at degree `degeneracy`
// onward; it induces a subgraph of minimum degree >= degeneracy and has at
// least degeneracy+1 vertices (when the graph has an edge).
struct CoreDecomposition {
    int degeneracy = 0;
    VertexSet core;
    std::vector<int> elimination_order;  // deletion order, all n vertices
};

struct HIndex {
    int value = 0;
    VertexSet witness;  // value vertices, each of degree >= value
};

// Largest h such that at least h vertices have degree at least h.
HIndex h_index(const Graph& g);

// Iterated minimum-degree deletion, ties broken by lowest vertex id.
CoreDecomposition degeneracy_core(const Graph& g);

// (min degree, max degree); rejects the empty graph.
std::pair<int, int> degree_profile(const Graph& g);

struct CliqueWitness {
    int size = 0;
    VertexSet clique;
};

// Exact maximum clique by branch and bound with a greedy-coloring upper
// bound. Guarded by size_limit.
CliqueWitness clique_number(const Graph& g, int size_limit = 128);

// Exact treewidth via search over elimination orders with memoized dead
// states; intended for desk-scale graphs only.
int treewidth_exact(const Graph& g, int size_limit = 24);

}  // namespace ag

#endif
