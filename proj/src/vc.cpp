#include "ag/vc.hpp"

#include <algorithm>
#include <chrono>

#include "ag/bits.hpp"
#include "ag/params.hpp"

namespace ag {

namespace {

using Clock = std::chrono::steady_clock;

struct SearchBudget {
    long long node_limit = 0;
    Clock::time_point deadline{};
    bool timed = false;
    long long nodes = 0;

    explicit SearchBudget(const SolverLimits& limits) {
        node_limit = limits.max_nodes;
        if (limits.max_seconds > 0) {
            timed = true;
            deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(limits.max_seconds));
        }
    }

    void tick() {
        ++nodes;
        if (node_limit > 0 && nodes > node_limit)
            throw budget_exceeded_error("vertex cover search: node limit exceeded");
        if (timed && (nodes & 1023) == 0 && Clock::now() > deadline)
            throw budget_exceeded_error("vertex cover search: time limit exceeded");
    }
};

// Branch-and-reduce search on a masked subgraph. solve() returns the exact
// minimum cover of g[alive] together with a witness if it is <= cutoff,
// nullopt otherwise.
struct VcSearch {
    const BitGraph& g;
    SearchBudget& budget;

    using Outcome = std::optional<std::pair<int, VertexSet>>;

    int clique_cover_lb(const Bits& alive) const {
        std::vector<std::pair<int, int>> order;
        for (int v = alive.first(); v != -1; v = alive.next(v))
            order.emplace_back(g.degree_in(v, alive), v);
        std::sort(order.begin(), order.end());
        Bits unused = alive;
        int lb = 0;
        for (auto [d, v] : order) {
            if (!unused.test(v)) continue;
            unused.reset(v);
            Bits cand = g.adj[v] & unused;
            int size = 1;
            while (cand.any()) {
                int pick = -1, score = -1;
                for (int u = cand.first(); u != -1; u = cand.next(u)) {
                    int s = g.adj[u].count_and(cand);
                    if (s > score) {
                        score = s;
                        pick = u;
                    }
                }
                unused.reset(pick);
                cand &= g.adj[pick];
                ++size;
            }
            lb += size - 1;
        }
        return lb;
    }

    std::vector<Bits> components(const Bits& alive) const {
        std::vector<Bits> comps;
        Bits todo = alive;
        while (todo.any()) {
            int s = todo.first();
            Bits comp(g.n);
            comp.set(s);
            Bits frontier(g.n);
            frontier.set(s);
            while (frontier.any()) {
                Bits next(g.n);
                for (int v = frontier.first(); v != -1; v = frontier.next(v)) next |= g.adj[v];
                next &= todo;
                next.subtract(comp);
                comp |= next;
                frontier = next;
            }
            todo.subtract(comp);
            comps.push_back(comp);
        }
        return comps;
    }

    Outcome solve(Bits alive, int cutoff) {
        budget.tick();
        if (cutoff < 0) return std::nullopt;
        VertexSet taken;
        int cnt = 0;

        // reductions: isolated, pendant, triangle-degree-2, high-degree
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = alive.first(); v != -1; v = alive.next(v)) {
                Bits nb = g.adj[v] & alive;
                int d = nb.count();
                if (d == 0) {
                    alive.reset(v);
                    changed = true;
                } else if (d == 1) {
                    int u = nb.first();
                    taken.push_back(u);
                    ++cnt;
                    alive.reset(v);
                    alive.reset(u);
                    changed = true;
                } else if (d == 2) {
                    int a = nb.first(), b = nb.next(a);
                    if (g.adj[a].test(b)) {
                        taken.push_back(a);
                        taken.push_back(b);
                        cnt += 2;
                        alive.reset(v);
                        alive.reset(a);
                        alive.reset(b);
                        changed = true;
                    }
                } else if (d > cutoff - cnt) {
                    taken.push_back(v);
                    ++cnt;
                    alive.reset(v);
                    changed = true;
                }
                if (cnt > cutoff) return std::nullopt;
            }
        }
        if (cnt > cutoff) return std::nullopt;
        if (alive.none()) return std::make_pair(cnt, std::move(taken));

        if (cnt + clique_cover_lb(alive) > cutoff) return std::nullopt;

        auto comps = components(alive);
        if (comps.size() > 1) {
            std::sort(comps.begin(), comps.end(),
                      [](const Bits& a, const Bits& b) { return a.count() < b.count(); });
            std::vector<int> lbs(comps.size());
            int lb_total = 0;
            for (size_t i = 0; i < comps.size(); ++i) {
                lbs[i] = clique_cover_lb(comps[i]);
                lb_total += lbs[i];
            }
            int total = 0;
            for (size_t i = 0; i < comps.size(); ++i) {
                lb_total -= lbs[i];
                int cap = cutoff - cnt - total - lb_total;
                auto sub = solve(comps[i], std::min(cap, comps[i].count()));
                if (!sub) return std::nullopt;
                total += sub->first;
                taken.insert(taken.end(), sub->second.begin(), sub->second.end());
            }
            return std::make_pair(cnt + total, std::move(taken));
        }

        // branch on a maximum-degree vertex: take its neighborhood or itself
        int v = -1, vdeg = -1;
        for (int u = alive.first(); u != -1; u = alive.next(u)) {
            int d = g.degree_in(u, alive);
            if (d > vdeg) {
                vdeg = d;
                v = u;
            }
        }
        int rem = cutoff - cnt;
        Outcome best;
        Bits nv = g.adj[v] & alive;
        if (vdeg <= rem) {
            Bits rest = alive;
            rest.subtract(nv);
            rest.reset(v);
            auto sub = solve(rest, rem - vdeg);
            if (sub) {
                VertexSet s = sub->second;
                for (int u = nv.first(); u != -1; u = nv.next(u)) s.push_back(u);
                best = std::make_pair(sub->first + vdeg, std::move(s));
            }
        }
        int cap = std::min(rem, best ? best->first - 1 : rem) - 1;
        if (cap >= 0) {
            Bits rest = alive;
            rest.reset(v);
            auto sub = solve(rest, cap);
            if (sub && (!best || sub->first + 1 < best->first)) {
                VertexSet s = sub->second;
                s.push_back(v);
                best = std::make_pair(sub->first + 1, std::move(s));
            }
        }
        if (!best) return std::nullopt;
        taken.insert(taken.end(), best->second.begin(), best->second.end());
        return std::make_pair(cnt + best->first, std::move(taken));
    }
};

}  // namespace

VcKernel kernelize_vc(const Graph& g, int k) {
    if (k < 0) throw input_error("vertex cover budget must be nonnegative");
    const int n = g.num_vertices();
    BitGraph bg(g);
    Bits alive(n, true);
    VcKernel kern;
    kern.budget = k;

    bool changed = true;
    while (changed && kern.budget >= 0) {
        changed = false;
        for (int v = alive.first(); v != -1; v = alive.next(v)) {
            Bits nb = bg.adj[v] & alive;
            int d = nb.count();
            if (d == 0) {
                alive.reset(v);
                changed = true;
            } else if (d == 1) {
                int u = nb.first();
                kern.forced.push_back(u);
                --kern.budget;
                alive.reset(v);
                alive.reset(u);
                changed = true;
            } else if (d > kern.budget) {
                kern.forced.push_back(v);
                --kern.budget;
                alive.reset(v);
                changed = true;
            }
            if (kern.budget < 0) break;
        }
    }
    kern.forced = sorted_unique(std::move(kern.forced));
    auto sub = induced_subgraph(g, alive.to_vector());
    kern.graph = std::move(sub.graph);
    kern.to_original = std::move(sub.to_original);
    if (kern.budget < 0) kern.infeasible = true;
    // Buss bound: every surviving vertex has degree in 2..budget
    long long b = kern.budget;
    if (!kern.infeasible &&
        (kern.graph.num_vertices() > b * (b + 1) || kern.graph.num_edges() > b * b))
        kern.infeasible = true;
    return kern;
}

SolveResult vc_decide(const Graph& g, int k, const SolverLimits& limits) {
    auto start = Clock::now();
    SolveResult res;
    VcKernel kern = kernelize_vc(g, k);
    if (!kern.infeasible) {
        BitGraph bg(kern.graph);
        SearchBudget budget(limits);
        VcSearch search{bg, budget};
        auto sub = search.solve(Bits(bg.n, true), kern.budget);
        res.nodes_explored = budget.nodes;
        if (sub) {
            VertexSet cert = kern.forced;
            for (int v : sub->second) cert.push_back(kern.to_original[v]);
            res.feasible = true;
            res.certificate = sorted_unique(std::move(cert));
        }
    }
    res.time_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return res;
}

VcOptimum vc_optimum(const Graph& g, int size_limit, const SolverLimits& limits) {
    if (g.num_vertices() > size_limit)
        throw capacity_error("vc_optimum guard: " + std::to_string(g.num_vertices()) + " > " +
                             std::to_string(size_limit) + " vertices");
    BitGraph bg(g);
    // greedy max-degree cover as an upper bound
    Bits alive(bg.n, true);
    int ub = 0;
    while (true) {
        int v = -1, best = 0;
        for (int u = alive.first(); u != -1; u = alive.next(u)) {
            int d = bg.degree_in(u, alive);
            if (d > best) {
                best = d;
                v = u;
            }
        }
        if (v == -1) break;
        alive.reset(v);
        ++ub;
    }
    SearchBudget budget(limits);
    VcSearch search{bg, budget};
    auto sub = search.solve(Bits(bg.n, true), ub);
    VcOptimum out;
    out.size = sub->first;
    out.cover = sorted_unique(std::move(sub->second));
    out.nodes_explored = budget.nodes;
    return out;
}

BranchingResult vc_above_h_index(const Graph& g, int k, const SolverLimits& limits) {
    if (k < 0) throw input_error("vertex cover budget must be nonnegative");
    auto start = Clock::now();
    HIndex h = h_index(g);
    BranchingResult br;
    br.guarantee = h.value;
    br.ell = k - h.value;

    auto finish = [&](bool feasible, std::optional<VertexSet> cert, long long nodes) {
        br.result.feasible = feasible;
        br.result.certificate = std::move(cert);
        br.result.nodes_explored = nodes;
        br.result.time_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        return br;
    };

    if (h.value == 0) return finish(true, VertexSet{}, 0);  // edgeless

    long long nodes = 0;
    // case 1: all witness vertices join the cover
    br.cases_enumerated = 1;
    if (k >= h.value) {
        br.subcall_budgets.push_back(k - h.value);
        auto sub = delete_vertices(g, h.witness);
        SolveResult r = vc_decide(sub.graph, k - h.value, limits);
        nodes += r.nodes_explored;
        if (r.feasible) {
            VertexSet cert = h.witness;
            for (int v : *r.certificate) cert.push_back(sub.to_original[v]);
            return finish(true, sorted_unique(std::move(cert)), nodes);
        }
    }
    // case 2: some witness vertex stays out, so its whole neighborhood joins
    for (int vi : h.witness) {
        ++br.cases_enumerated;
        VertexSet nb(g.neighbors(vi).begin(), g.neighbors(vi).end());
        if (static_cast<int>(nb.size()) > k) continue;
        br.subcall_budgets.push_back(k - static_cast<int>(nb.size()));
        auto sub = delete_vertices(g, nb);
        SolveResult r = vc_decide(sub.graph, k - static_cast<int>(nb.size()), limits);
        nodes += r.nodes_explored;
        if (r.feasible) {
            VertexSet cert = nb;
            for (int v : *r.certificate) cert.push_back(sub.to_original[v]);
            return finish(true, sorted_unique(std::move(cert)), nodes);
        }
    }
    return finish(false, std::nullopt, nodes);
}

}  // namespace ag
