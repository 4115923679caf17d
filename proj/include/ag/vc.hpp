#ifndef AG_VC_HPP
#define AG_VC_HPP

#include "ag/graph.hpp"
#include "ag/solve.hpp"

namespace ag {

// Equivalent reduced instance after the degree-0 / degree-1 / high-degree
// rules. Forced vertices belong to every lifted solution. If the reduced
// graph still has more than budget*(budget+1) vertices (or more than
// budget^2 edges) the instance cannot be feasible and `infeasible` is set.
struct VcKernel {
    Graph graph;
    std::vector<int> to_original;  // kernel id -> original id
    int budget = 0;
    VertexSet forced;  // original ids
    bool infeasible = false;
};

VcKernel kernelize_vc(const Graph& g, int k);

// Exact decision: is there a vertex cover of size at most k?
SolveResult vc_decide(const Graph& g, int k, const SolverLimits& limits = {});

struct VcOptimum {
    int size = 0;
    VertexSet cover;
    long long nodes_explored = 0;
};

VcOptimum vc_optimum(const Graph& g, int size_limit = 256, const SolverLimits& limits = {});

// One round of (h+1)-way branching on h witness vertices of degree >= h,
// every subcall delegated to vc_decide with budget at most k - h.
BranchingResult vc_above_h_index(const Graph& g, int k, const SolverLimits& limits = {});

}  // namespace ag

#endif
