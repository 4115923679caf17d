#include "ag/params.hpp"

#include <algorithm>
#include <numeric>

#include "ag/bits.hpp"

namespace ag {

HIndex h_index(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    int h = 0;
    while (h < n && g.degree(order[h]) >= h + 1) ++h;
    HIndex out;
    out.value = h;
    out.witness.assign(order.begin(), order.begin() + h);
    std::sort(out.witness.begin(), out.witness.end());
    return out;
}

CoreDecomposition degeneracy_core(const Graph& g) {
    const int n = g.num_vertices();
    CoreDecomposition out;
    std::vector<int> deg(n);
    std::vector<char> deleted(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

    std::vector<int> deletion_degree(n, 0);
    out.elimination_order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!deleted[v] && (best == -1 || deg[v] < deg[best])) best = v;
        out.elimination_order.push_back(best);
        deletion_degree[step] = deg[best];
        out.degeneracy = std::max(out.degeneracy, deg[best]);
        deleted[best] = 1;
        for (int w : g.neighbors(best))
            if (!deleted[w]) --deg[w];
    }
    // core: everything still present when a vertex of degree d first goes
    for (int step = 0; step < n; ++step)
        if (deletion_degree[step] == out.degeneracy) {
            out.core.assign(out.elimination_order.begin() + step, out.elimination_order.end());
            std::sort(out.core.begin(), out.core.end());
            break;
        }
    return out;
}

std::pair<int, int> degree_profile(const Graph& g) {
    if (g.num_vertices() == 0) throw input_error("degree profile of empty graph");
    int lo = g.degree(0), hi = g.degree(0);
    for (int v = 1; v < g.num_vertices(); ++v) {
        lo = std::min(lo, g.degree(v));
        hi = std::max(hi, g.degree(v));
    }
    return {lo, hi};
}

namespace {

struct CliqueSearch {
    const BitGraph& g;
    std::vector<int> current;
    VertexSet best;

    // candidates ordered for coloring; returns color classes implicitly via
    // per-vertex color numbers
    void expand(const Bits& cand) {
        if (cand.none()) {
            if (current.size() > best.size()) best.assign(current.begin(), current.end());
            return;
        }
        // greedy coloring in descending-degree order; color(v) upper-bounds
        // the clique extension through v
        std::vector<int> verts = cand.to_vector();
        std::sort(verts.begin(), verts.end(), [&](int a, int b) {
            int da = g.adj[a].count_and(cand), db = g.adj[b].count_and(cand);
            if (da != db) return da > db;
            return a < b;
        });
        std::vector<Bits> classes;
        for (size_t i = 0; i < verts.size(); ++i) {
            int v = verts[i];
            size_t c = 0;
            while (c < classes.size() && g.adj[v].intersects(classes[c])) ++c;
            if (c == classes.size()) classes.emplace_back(g.n);
            classes[c].set(v);
        }
        // process by decreasing color so pruning kicks in early
        std::vector<std::pair<int, int>> by_color;
        for (size_t c = 0; c < classes.size(); ++c)
            for (int v = classes[c].first(); v != -1; v = classes[c].next(v))
                by_color.emplace_back(static_cast<int>(c) + 1, v);
        std::sort(by_color.begin(), by_color.end());
        Bits remaining = cand;
        for (auto it = by_color.rbegin(); it != by_color.rend(); ++it) {
            auto [ub, v] = *it;
            if (current.size() + ub <= best.size()) return;
            current.push_back(v);
            remaining.reset(v);
            expand(remaining & g.adj[v]);
            current.pop_back();
        }
    }
};

}  // namespace

CliqueWitness clique_number(const Graph& g, int size_limit) {
    if (g.num_vertices() > size_limit)
        throw capacity_error("clique_number guard: " + std::to_string(g.num_vertices()) + " > " +
                             std::to_string(size_limit) + " vertices");
    CliqueWitness out;
    if (g.num_vertices() == 0) return out;
    BitGraph bg(g);
    CliqueSearch search{bg, {}, {}};
    search.expand(Bits(bg.n, true));
    out.clique = sorted_unique(search.best);
    out.size = static_cast<int>(out.clique.size());
    return out;
}

}  // namespace ag
