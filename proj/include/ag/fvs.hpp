#ifndef AG_FVS_HPP
#define AG_FVS_HPP

#include "ag/graph.hpp"
#include "ag/solve.hpp"

namespace ag {

// Equivalent reduced instance after deleting degree-<=1 vertices, smoothing
// degree-2 vertices with non-adjacent neighbors, and the triangle forcing
// rule (a triangle with two degree-2 vertices forces its third vertex).
// Smoothing may add edges, so the reduced graph is not an induced subgraph;
// to_original maps its ids back. budget < 0 means the instance is already
// infeasible.
struct FvsReduction {
    Graph graph;
    std::vector<int> to_original;
    int budget = 0;
    VertexSet forced;  // original ids
    bool infeasible = false;
};

FvsReduction reduce_fvs(const Graph& g, int k);

// Exact decision: is there a set of at most k vertices whose deletion leaves
// a forest?
SolveResult fvs_decide(const Graph& g, int k, const SolverLimits& limits = {});

// One round of core branching: delete the whole core, or the core
// neighborhood of a core vertex, or that neighborhood minus one vertex; each
// resulting instance is delegated to fvs_decide.
BranchingResult fvs_above_degeneracy(const Graph& g, int k, const SolverLimits& limits = {});

}  // namespace ag

#endif
