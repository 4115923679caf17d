#ifndef AG_SOLVE_HPP
#define AG_SOLVE_HPP

#include <optional>
#include <vector>

#include "ag/graph.hpp"

namespace ag {

struct SolveResult {
    bool feasible = false;
    std::optional<VertexSet> certificate;  // present iff feasible
    long long nodes_explored = 0;
    double time_ms = 0.0;
};

// Optional caps on a single solver call. Zero means unlimited. Exceeding a
// cap raises budget_exceeded_error.
struct SolverLimits {
    long long max_nodes = 0;
    double max_seconds = 0.0;
};

// Result of a one-round above-guarantee branching: the plain result plus the
// guarantee value and the budgets of the subcalls that were dispatched.
struct BranchingResult {
    SolveResult result;
    int guarantee = 0;  // h-index resp. degeneracy
    int ell = 0;        // k - guarantee, reported as-is (may be negative)
    std::vector<int> subcall_budgets;
    long long cases_enumerated = 0;
};

}  // namespace ag

#endif
