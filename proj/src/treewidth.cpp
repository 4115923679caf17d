#include <algorithm>
#include <cstdint>
#include <unordered_set>

#include "ag/bits.hpp"
#include "ag/params.hpp"

// Exact treewidth as a search over elimination orders. A state is the set S
// of already-eliminated vertices; the graph after eliminating S does not
// depend on the order, so failed states can be memoized. Vertices whose
// fill-degree is <= 2 or whose fill-neighborhood is a clique are eliminated
// without branching (both are safe when the target width is >= 2).

namespace ag {

namespace {

constexpr int kMaxTreewidthVertices = 31;  // state fits a uint32 mask

struct TwInstance {
    int n;
    std::vector<std::uint32_t> adj;

    // vertices outside S∪{v} reachable from v via internal vertices in S;
    // this is exactly v's neighborhood in the graph with S eliminated
    std::uint32_t fill_neighborhood(int v, std::uint32_t s) const {
        std::uint32_t seen = (1u << v) | adj[v];
        std::uint32_t frontier = adj[v] & s;
        while (frontier) {
            int u = std::countr_zero(frontier);
            frontier &= frontier - 1;
            std::uint32_t fresh = adj[u] & ~seen;
            seen |= fresh;
            frontier |= fresh & s;
        }
        return seen & ~s & ~(1u << v);
    }
};

struct TwSearch {
    const TwInstance& inst;
    int target;
    std::unordered_set<std::uint32_t> dead;
    std::uint32_t all;

    bool run(std::uint32_t s) {
        int remaining = std::popcount(all & ~s);
        if (remaining <= target + 1) return true;
        if (dead.contains(s)) return false;

        std::vector<std::pair<int, std::uint32_t>> moves;  // (v, fill nbhd)
        for (std::uint32_t rest = all & ~s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint32_t nb = inst.fill_neighborhood(v, s);
            int d = std::popcount(nb);
            if (d > target) continue;
            if (d <= 2) return run(s | (1u << v));  // low-degree rule
            // simplicial rule: nb is a clique in the eliminated graph
            bool simplicial = true;
            for (std::uint32_t probe = nb; probe && simplicial;) {
                int u = std::countr_zero(probe);
                probe &= probe - 1;
                if ((nb & ~(1u << u) & ~inst.fill_neighborhood(u, s)) != 0) simplicial = false;
            }
            if (simplicial) return run(s | (1u << v));
            moves.emplace_back(v, nb);
        }
        for (auto& [v, nb] : moves)
            if (run(s | (1u << v))) return true;
        dead.insert(s);
        return false;
    }
};

// elimination width of a concrete order, used for upper-bound heuristics
int width_of_order(const Graph& g, const std::vector<int>& order) {
    int n = g.num_vertices();
    std::vector<std::uint32_t> adj(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) adj[u] |= 1u << v;
    std::uint32_t alive = n == 32 ? ~0u : (1u << n) - 1;
    int width = 0;
    for (int v : order) {
        std::uint32_t nb = adj[v] & alive;
        width = std::max(width, std::popcount(nb));
        alive &= ~(1u << v);
        for (std::uint32_t probe = nb; probe;) {
            int u = std::countr_zero(probe);
            probe &= probe - 1;
            adj[u] |= nb & ~(1u << u);
        }
    }
    return width;
}

// greedy orders: pick the vertex of minimum fill (or minimum degree)
std::vector<int> greedy_order(const Graph& g, bool min_fill) {
    int n = g.num_vertices();
    std::vector<std::uint32_t> adj(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) adj[u] |= 1u << v;
    std::uint32_t alive = n == 32 ? ~0u : (1u << n) - 1;
    std::vector<int> order;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long best_score = 0;
        for (std::uint32_t rest = alive; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint32_t nb = adj[v] & alive;
            long score;
            if (min_fill) {
                score = 0;
                for (std::uint32_t probe = nb; probe;) {
                    int u = std::countr_zero(probe);
                    probe &= probe - 1;
                    score += std::popcount(nb & ~adj[u] & ~(1u << u));
                }
            } else {
                score = std::popcount(nb);
            }
            if (best == -1 || score < best_score) {
                best = v;
                best_score = score;
            }
        }
        order.push_back(best);
        std::uint32_t nb = adj[best] & alive;
        alive &= ~(1u << best);
        for (std::uint32_t probe = nb; probe;) {
            int u = std::countr_zero(probe);
            probe &= probe - 1;
            adj[u] |= nb & ~(1u << u);
        }
    }
    return order;
}

}  // namespace

int treewidth_exact(const Graph& g, int size_limit) {
    const int n = g.num_vertices();
    if (n > size_limit)
        throw capacity_error("treewidth guard: " + std::to_string(n) + " > " +
                             std::to_string(size_limit) + " vertices");
    if (n > kMaxTreewidthVertices)
        throw capacity_error("treewidth limited to " + std::to_string(kMaxTreewidthVertices) +
                             " vertices");
    if (n <= 1) return 0;

    int ub = std::min(width_of_order(g, greedy_order(g, true)),
                      width_of_order(g, greedy_order(g, false)));
    int lb = degeneracy_core(g).degeneracy;  // degeneracy never exceeds treewidth
    if (lb >= ub) return ub;

    TwInstance inst;
    inst.n = n;
    inst.adj.assign(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) inst.adj[u] |= 1u << v;

    for (int target = lb; target < ub; ++target) {
        TwSearch search{inst, target, {}, n == 32 ? ~0u : (1u << n) - 1};
        if (search.run(0)) return target;
    }
    return ub;
}

}  // namespace ag
