#ifndef AG_PLANAR_HPP
#define AG_PLANAR_HPP

#include "ag/graph.hpp"
#include "ag/solve.hpp"

namespace ag {

struct Planarity {
    bool planar = false;
    // edges of a Kuratowski subgraph when non-planar
    std::vector<std::pair<int, int>> kuratowski;
};

Planarity check_planar(const Graph& g);

// Vertex cover lower bound implied by branchwidth beta on planar graphs:
// max(0, floor((beta^2 - 9) / 72)).
int grid_vc_lower_bound(int beta);

struct WidthBoundReport {
    int treewidth = 0;
    int branchwidth_lb = 0;  // ceil(2(tw+1)/3), a valid branchwidth lower bound
    int vc_lower_bound = 0;  // r
    bool rejected = false;
    int ell = 0;  // k - treewidth
};

struct PlanarVcResult {
    SolveResult result;
    WidthBoundReport report;
};

// Reject when k < r, otherwise delegate to vc_decide. Planar inputs only.
PlanarVcResult vc_above_treewidth_planar(const Graph& g, int k, const SolverLimits& limits = {},
                                         int tw_size_limit = 24);

}  // namespace ag

#endif
