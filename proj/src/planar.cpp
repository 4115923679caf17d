#include "ag/planar.hpp"

#include <chrono>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "ag/params.hpp"
#include "ag/vc.hpp"

namespace ag {

Planarity check_planar(const Graph& g) {
    using BoostGraph =
        boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                              boost::property<boost::vertex_index_t, int>,
                              boost::property<boost::edge_index_t, int>>;
    Planarity out;
    const int n = g.num_vertices();
    if (n <= 4) {  // fewer than five vertices can never hold K5 or K3,3
        out.planar = true;
        return out;
    }
    BoostGraph bg(n);
    for (auto [u, v] : g.edge_list()) boost::add_edge(u, v, bg);
    int edge_index = 0;
    for (auto [ei, eend] = boost::edges(bg); ei != eend; ++ei)
        boost::put(boost::edge_index, bg, *ei, edge_index++);

    using Edge = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<Edge> kuratowski;
    out.planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
    if (!out.planar)
        for (const Edge& e : kuratowski)
            out.kuratowski.emplace_back(static_cast<int>(boost::source(e, bg)),
                                        static_cast<int>(boost::target(e, bg)));
    return out;
}

int grid_vc_lower_bound(int beta) {
    if (beta < 0) throw input_error("branchwidth must be nonnegative");
    long long r = (static_cast<long long>(beta) * beta - 9) / 72;  // floor; numerator may be < 0
    if (static_cast<long long>(beta) * beta < 9) r = 0;
    return static_cast<int>(std::max(0LL, r));
}

PlanarVcResult vc_above_treewidth_planar(const Graph& g, int k, const SolverLimits& limits,
                                         int tw_size_limit) {
    if (k < 0) throw input_error("vertex cover budget must be nonnegative");
    auto start = std::chrono::steady_clock::now();
    if (!check_planar(g).planar)
        throw input_error("vc_above_treewidth_planar requires a planar input graph");

    PlanarVcResult out;
    int tw = treewidth_exact(g, tw_size_limit);
    out.report.treewidth = tw;
    out.report.branchwidth_lb = (2 * (tw + 1) + 2) / 3;  // ceil(2(tw+1)/3)
    out.report.vc_lower_bound = grid_vc_lower_bound(out.report.branchwidth_lb);
    out.report.ell = k - tw;
    out.report.rejected = k < out.report.vc_lower_bound;

    if (out.report.rejected) {
        out.result.feasible = false;
    } else {
        out.result = vc_decide(g, k, limits);
    }
    out.result.time_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    return out;
}

}  // namespace ag
