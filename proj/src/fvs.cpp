#include "ag/fvs.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "ag/params.hpp"

namespace ag {

namespace {

using Clock = std::chrono::steady_clock;

// Mutable working graph over the original id space. Smoothing adds edges, so
// this is not a masked view of the input.
struct WorkGraph {
    std::vector<std::vector<int>> adj;  // sorted
    std::vector<char> alive;

    explicit WorkGraph(const Graph& g) : adj(g.num_vertices()), alive(g.num_vertices(), 1) {
        for (int v = 0; v < g.num_vertices(); ++v)
            adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    }

    int n() const { return static_cast<int>(adj.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const {
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    }
    void add_edge(int u, int v) {
        adj[u].insert(std::lower_bound(adj[u].begin(), adj[u].end(), v), v);
        adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
    }
    void remove_vertex(int v) {
        for (int u : adj[v]) {
            auto& nb = adj[u];
            nb.erase(std::lower_bound(nb.begin(), nb.end(), v));
        }
        adj[v].clear();
        alive[v] = 0;
    }
    bool acyclic() const {
        std::vector<int> parent(n());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        for (int u = 0; u < n(); ++u)
            for (int v : adj[u]) {
                if (v <= u) continue;
                int ru = find(u), rv = find(v);
                if (ru == rv) return false;
                parent[ru] = rv;
            }
        return true;
    }
};

// Exhaustive application of the safe rules; forced vertices are appended and
// the budget decremented.
void apply_rules(WorkGraph& w, VertexSet& forced, int& budget) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < w.n(); ++v) {
            if (!w.alive[v]) continue;
            int d = w.degree(v);
            if (d <= 1) {
                w.remove_vertex(v);
                changed = true;
            } else if (d == 2) {
                int a = w.adj[v][0], b = w.adj[v][1];
                if (!w.has_edge(a, b)) {
                    w.remove_vertex(v);
                    w.add_edge(a, b);
                    changed = true;
                } else if (w.degree(a) == 2) {
                    // triangle {v,a,b} with two degree-2 corners: every cycle
                    // through v or a passes b, so b joins the solution
                    forced.push_back(b);
                    --budget;
                    w.remove_vertex(b);
                    changed = true;
                } else if (w.degree(b) == 2) {
                    forced.push_back(a);
                    --budget;
                    w.remove_vertex(a);
                    changed = true;
                }
            }
        }
    }
}

// Some shortest cycle of the working graph, empty if acyclic. BFS from every
// root; candidate closures are reconstructed and the shortest kept.
std::vector<int> shortest_cycle(const WorkGraph& w) {
    std::vector<int> best;
    const int n = w.n();
    std::vector<int> dist(n), par(n);
    for (int s = 0; s < n; ++s) {
        if (!w.alive[s]) continue;
        std::fill(dist.begin(), dist.end(), -1);
        std::vector<int> queue{s};
        dist[s] = 0;
        par[s] = -1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int v : w.adj[u]) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    par[v] = u;
                    queue.push_back(v);
                } else if (v != par[u] && dist[v] <= dist[u]) {
                    // closure edge: walk both ancestor paths to their meet
                    std::vector<int> pu, pv;
                    for (int x = u; x != -1; x = par[x]) pu.push_back(x);
                    for (int x = v; x != -1; x = par[x]) pv.push_back(x);
                    std::vector<char> on_pu(n, 0);
                    for (int x : pu) on_pu[x] = 1;
                    int meet = -1;
                    for (int x : pv)
                        if (on_pu[x]) {
                            meet = x;
                            break;
                        }
                    std::vector<int> cyc;
                    for (int x = u; x != meet; x = par[x]) cyc.push_back(x);
                    cyc.push_back(meet);
                    std::vector<int> tail;
                    for (int x = v; x != meet; x = par[x]) tail.push_back(x);
                    std::reverse(tail.begin(), tail.end());
                    cyc.insert(cyc.end(), tail.begin(), tail.end());
                    if (cyc.size() >= 3 && (best.empty() || cyc.size() < best.size())) best = cyc;
                }
            }
        }
    }
    if (!best.empty()) {
        // start at the smallest id, preserving cyclic order
        auto it = std::min_element(best.begin(), best.end());
        std::rotate(best.begin(), it, best.end());
    }
    return best;
}

// Degree-<=1 removal plus smoothing only; cycles survive one-to-one, which
// is what the packing bound needs.
void simplify_for_packing(WorkGraph& w) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < w.n(); ++v) {
            if (!w.alive[v]) continue;
            int d = w.degree(v);
            if (d <= 1) {
                w.remove_vertex(v);
                changed = true;
            } else if (d == 2) {
                int a = w.adj[v][0], b = w.adj[v][1];
                if (!w.has_edge(a, b)) {
                    w.remove_vertex(v);
                    w.add_edge(a, b);
                    changed = true;
                }
            }
        }
    }
}

// greedy vertex-disjoint cycle packing, a lower bound on the solution size
int cycle_packing_lb(WorkGraph w) {
    int count = 0;
    while (true) {
        simplify_for_packing(w);
        auto cyc = shortest_cycle(w);
        if (cyc.empty()) break;
        ++count;
        for (int v : cyc) w.remove_vertex(v);
    }
    return count;
}

struct FvsSearch {
    long long node_limit = 0;
    Clock::time_point deadline{};
    bool timed = false;
    long long nodes = 0;

    void tick() {
        ++nodes;
        if (node_limit > 0 && nodes > node_limit)
            throw budget_exceeded_error("feedback vertex set search: node limit exceeded");
        if (timed && (nodes & 255) == 0 && Clock::now() > deadline)
            throw budget_exceeded_error("feedback vertex set search: time limit exceeded");
    }

    std::optional<VertexSet> solve(WorkGraph w, int budget) {
        tick();
        VertexSet chosen;
        apply_rules(w, chosen, budget);
        if (budget < 0) return std::nullopt;
        auto cyc = shortest_cycle(w);
        if (cyc.empty()) return chosen;
        if (budget == 0) return std::nullopt;
        if (cycle_packing_lb(w) > budget) return std::nullopt;
        for (int v : cyc) {
            WorkGraph child = w;
            child.remove_vertex(v);
            auto sub = solve(std::move(child), budget - 1);
            if (sub) {
                sub->push_back(v);
                sub->insert(sub->end(), chosen.begin(), chosen.end());
                return sub;
            }
        }
        return std::nullopt;
    }
};

}  // namespace

FvsReduction reduce_fvs(const Graph& g, int k) {
    if (k < 0) throw input_error("feedback vertex set budget must be nonnegative");
    WorkGraph w(g);
    FvsReduction out;
    out.budget = k;
    apply_rules(w, out.forced, out.budget);
    out.forced = sorted_unique(std::move(out.forced));
    VertexSet keep;
    for (int v = 0; v < w.n(); ++v)
        if (w.alive[v]) keep.push_back(v);
    out.to_original = keep;
    std::vector<int> newid(w.n(), -1);
    for (size_t i = 0; i < keep.size(); ++i) newid[keep[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int v : keep)
        for (int u : w.adj[v])
            if (v < u) edges.emplace_back(newid[v], newid[u]);
    out.graph = Graph(static_cast<int>(keep.size()), edges);
    out.infeasible = out.budget < 0;
    return out;
}

SolveResult fvs_decide(const Graph& g, int k, const SolverLimits& limits) {
    if (k < 0) throw input_error("feedback vertex set budget must be nonnegative");
    auto start = Clock::now();
    FvsSearch search;
    search.node_limit = limits.max_nodes;
    if (limits.max_seconds > 0) {
        search.timed = true;
        search.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                             std::chrono::duration<double>(limits.max_seconds));
    }
    SolveResult res;
    auto cert = search.solve(WorkGraph(g), k);
    res.nodes_explored = search.nodes;
    if (cert) {
        res.feasible = true;
        res.certificate = sorted_unique(std::move(*cert));
    }
    res.time_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return res;
}

BranchingResult fvs_above_degeneracy(const Graph& g, int k, const SolverLimits& limits) {
    if (k < 0) throw input_error("feedback vertex set budget must be nonnegative");
    auto start = Clock::now();
    CoreDecomposition core = degeneracy_core(g);
    BranchingResult br;
    br.guarantee = core.degeneracy;
    br.ell = k - core.degeneracy;

    long long nodes = 0;
    auto finish = [&](bool feasible, std::optional<VertexSet> cert) {
        br.result.feasible = feasible;
        br.result.certificate = std::move(cert);
        br.result.nodes_explored = nodes;
        br.result.time_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        return br;
    };

    auto attempt = [&](const VertexSet& removed, int budget) -> std::optional<VertexSet> {
        br.subcall_budgets.push_back(budget);
        auto sub = delete_vertices(g, removed);
        SolveResult r = fvs_decide(sub.graph, budget, limits);
        nodes += r.nodes_explored;
        if (!r.feasible) return std::nullopt;
        VertexSet cert = removed;
        for (int v : *r.certificate) cert.push_back(sub.to_original[v]);
        return sorted_unique(std::move(cert));
    };

    const VertexSet& core_set = core.core;
    // case 1: the whole core joins the solution
    br.cases_enumerated = 1;
    if (k >= static_cast<int>(core_set.size())) {
        if (auto cert = attempt(core_set, k - static_cast<int>(core_set.size())))
            return finish(true, std::move(*cert));
    }
    std::vector<char> in_core(g.num_vertices(), 0);
    for (int v : core_set) in_core[v] = 1;
    // case 2a: some core vertex is isolated in the remaining core forest
    for (int u : core_set) {
        ++br.cases_enumerated;
        VertexSet nb;
        for (int x : g.neighbors(u))
            if (in_core[x]) nb.push_back(x);
        if (static_cast<int>(nb.size()) > k) continue;
        if (auto cert = attempt(nb, k - static_cast<int>(nb.size())))
            return finish(true, std::move(*cert));
    }
    // case 2b: some core vertex is a leaf of the remaining core forest
    for (int u : core_set) {
        VertexSet nb;
        for (int x : g.neighbors(u))
            if (in_core[x]) nb.push_back(x);
        for (int v : nb) {
            ++br.cases_enumerated;
            VertexSet removed;
            for (int x : nb)
                if (x != v) removed.push_back(x);
            if (static_cast<int>(removed.size()) > k) continue;
            if (auto cert = attempt(removed, k - static_cast<int>(removed.size())))
                return finish(true, std::move(*cert));
        }
    }
    return finish(false, std::nullopt);
}

}  // namespace ag
