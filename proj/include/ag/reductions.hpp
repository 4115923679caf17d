#ifndef AG_REDUCTIONS_HPP
#define AG_REDUCTIONS_HPP

#include <map>
#include <optional>
#include <string>

#include "ag/graph.hpp"
#include "ag/io.hpp"

namespace ag {

// One label per output vertex tying it back to the source object. The
// meaning of a/b/c depends on kind; see the generator that emits it.
struct GadgetLabel {
    std::string kind;
    int a = -1;
    int b = -1;
    int c = -1;

    bool operator==(const GadgetLabel&) const = default;
};

struct ReductionArtifact {
    Graph graph;
    long long budget = 0;
    std::map<std::string, VertexSet> certificates;
    std::vector<GadgetLabel> gadget_map;  // indexed by output vertex id
    std::map<std::string, long long> claimed_params;
};

// (G, k)-clique instance to vertex cover on the complement with budget n-k.
// Labels: {"source", v}.
ReductionArtifact clique_to_vc_complement(const Graph& g, int k);

// Vertex cover to feedback vertex set: one extra triangle vertex per edge.
// Labels: {"source", v} and {"edge", index, u, v}.
ReductionArtifact vc_to_fvs_triangles(const Graph& g, int ell);

// Independent set (G, k) to vertex cover parameterized above distance to
// K_r-free (r >= 3). Labels: {"copy", i, j}, {"block_a", i, t},
// {"leaf_a", i, t}, {"block_b", c, t}, {"leaf_b", c, t}.
ReductionArtifact is_to_vc_above_krfree(const Graph& g, int k, int r);

// 3-CNF to vertex cover on a graph whose cluster deletion number equals its
// vertex cover number. Clause gadgets are complete tripartite 7+7+7,
// variable gadgets complete bipartite 3+3; budget 14m + 3n. The extended
// variant adds triangles joined to every base vertex and shifts the budget
// to 21m + 6n. Labels: {"clause_side", i, r, s}, {"variable_side", j, r, s}
// (kind prefixed "dummy_" for padding), {"t_triangle", t, pos}.
ReductionArtifact sat3_to_vc_above_cvd(const CnfFormula& phi, bool extended);

// Feedback vertex set (G, k) to feedback vertex set with budget |V(G)|-2 on
// a host whose vertex cover number is |V(G)|. Labels: {"source", v},
// {"leaf", v}, {"universal", t}.
ReductionArtifact fvs_to_fvs_below_vc(const Graph& g, int k);

// The explicit cover drawn from a satisfying assignment of phi for the base
// sat3_to_vc_above_cvd output; always has size exactly 14m + 3n.
VertexSet sat_cvd_cover_from_assignment(const CnfFormula& phi, const std::vector<bool>& assignment);

// Small-formula satisfiability by exhaustive assignment search.
std::optional<std::vector<bool>> find_satisfying_assignment(const CnfFormula& phi,
                                                            int var_limit = 24);

}  // namespace ag

#endif
