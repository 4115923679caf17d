#include "ag/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "ag/bits.hpp"

namespace ag {

namespace {

// Lexicographic combinations of {0..n-1} of a fixed size. visit returns true
// to stop. Returns whether a visit stopped the walk.
template <typename Visit>
bool for_each_combination(int n, int size, long long& work_left, Visit&& visit) {
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    if (size > n) return false;
    while (true) {
        if (--work_left < 0) throw capacity_error("oracle subset budget exhausted");
        if (visit(pick)) return true;
        int i = size - 1;
        while (i >= 0 && pick[i] == n - size + i) --i;
        if (i < 0) return false;
        ++pick[i];
        for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
}

bool covers_all_edges(const std::vector<std::pair<int, int>>& edges,
                      const std::vector<char>& in_set) {
    for (auto [u, v] : edges)
        if (!in_set[u] && !in_set[v]) return false;
    return true;
}

bool alive_is_forest(const Graph& g, const std::vector<char>& removed) {
    const int n = g.num_vertices();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (int u = 0; u < n; ++u) {
        if (removed[u]) continue;
        for (int v : g.neighbors(u)) {
            if (v <= u || removed[v]) continue;
            int ru = find(u), rv = find(v);
            if (ru == rv) return false;
            parent[ru] = rv;
        }
    }
    return true;
}

bool alive_is_cluster(const Graph& g, const std::vector<char>& removed) {
    for (int u = 0; u < g.num_vertices(); ++u) {
        if (removed[u]) continue;
        auto nb = g.neighbors(u);
        for (size_t i = 0; i < nb.size(); ++i) {
            if (removed[nb[i]]) continue;
            for (size_t j = i + 1; j < nb.size(); ++j)
                if (!removed[nb[j]] && !g.has_edge(nb[i], nb[j])) return false;
        }
    }
    return true;
}

bool alive_has_clique(const BitGraph& g, Bits cand, int need) {
    if (need == 0) return true;
    if (cand.count() < need) return false;
    for (int v = cand.first(); v != -1; v = cand.next(v)) {
        Bits next = cand & g.adj[v];
        // only extend with larger ids to avoid revisiting permutations
        for (int u = next.first(); u != -1 && u < v;) {
            next.reset(u);
            u = next.first();
        }
        if (alive_has_clique(g, next, need - 1)) return true;
        cand.reset(v);
        if (cand.count() < need) return false;
    }
    return false;
}

bool alive_kr_free(const BitGraph& g, const std::vector<char>& removed, int r) {
    Bits alive(g.n);
    for (int v = 0; v < g.n; ++v)
        if (!removed[v]) alive.set(v);
    return !alive_has_clique(g, alive, r);
}

// minimal subset search shared by the enumeration tiers
template <typename Feasible>
std::optional<OracleValue> enumerate_min_set(int n, int max_size, long long budget,
                                             Feasible&& feasible) {
    std::vector<char> in_set(n, 0);
    long long work_left = budget;
    for (int size = 0; size <= max_size; ++size) {
        OracleValue found;
        bool stopped = for_each_combination(n, size, work_left, [&](const std::vector<int>& pick) {
            std::fill(in_set.begin(), in_set.end(), 0);
            for (int v : pick) in_set[v] = 1;
            if (!feasible(in_set)) return false;
            found.value = size;
            found.witness = pick;
            return true;
        });
        if (stopped) return found;
    }
    return std::nullopt;
}

// ---- tier-2 vertex cover: plain max-degree branching with matching and
// ---- id-ordered clique-cover bounds; no kernelization, no components
struct VcOracleSearch {
    const BitGraph& g;
    long long nodes = 0;
    long long node_budget;

    int lower_bound(const Bits& alive) const {
        // greedy matching
        int matching = 0;
        Bits unused = alive;
        for (int u = unused.first(); u != -1; u = unused.next(u)) {
            Bits nb = g.adj[u] & unused;
            int v = nb.first();
            if (v != -1) {
                unused.reset(u);
                unused.reset(v);
                ++matching;
            }
        }
        // greedy clique cover in id order
        int cover = 0;
        Bits rest = alive;
        for (int u = rest.first(); u != -1; u = rest.next(u)) {
            rest.reset(u);
            Bits cand = g.adj[u] & rest;
            int size = 1;
            while (cand.any()) {
                int w = cand.first();
                rest.reset(w);
                cand &= g.adj[w];
                ++size;
            }
            cover += size - 1;
        }
        return std::max(matching, cover);
    }

    std::optional<std::pair<int, VertexSet>> solve(Bits alive, int cutoff) {
        if (++nodes > node_budget) throw capacity_error("oracle node budget exhausted");
        if (cutoff < 0) return std::nullopt;
        VertexSet taken;
        int cnt = 0;
        // pendant rule only
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = alive.first(); v != -1; v = alive.next(v)) {
                Bits nb = g.adj[v] & alive;
                int d = nb.count();
                if (d == 0) {
                    alive.reset(v);
                } else if (d == 1) {
                    int u = nb.first();
                    taken.push_back(u);
                    ++cnt;
                    alive.reset(v);
                    alive.reset(u);
                    changed = true;
                }
            }
        }
        if (cnt > cutoff) return std::nullopt;
        int best_deg = 0, pick = -1;
        for (int v = alive.first(); v != -1; v = alive.next(v)) {
            int d = g.degree_in(v, alive);
            if (d > best_deg) {
                best_deg = d;
                pick = v;
            }
        }
        if (pick == -1) return std::make_pair(cnt, std::move(taken));
        if (cnt + lower_bound(alive) > cutoff) return std::nullopt;

        int rem = cutoff - cnt;
        std::optional<std::pair<int, VertexSet>> best;
        Bits nb = g.adj[pick] & alive;
        int d = nb.count();
        if (d <= rem) {
            Bits rest = alive;
            rest.subtract(nb);
            rest.reset(pick);
            if (auto sub = solve(rest, rem - d)) {
                VertexSet s = sub->second;
                for (int u = nb.first(); u != -1; u = nb.next(u)) s.push_back(u);
                best = std::make_pair(sub->first + d, std::move(s));
            }
        }
        int cap = std::min(rem, best ? best->first - 1 : rem) - 1;
        if (cap >= 0) {
            Bits rest = alive;
            rest.reset(pick);
            if (auto sub = solve(rest, cap)) {
                if (!best || sub->first + 1 < best->first) {
                    VertexSet s = sub->second;
                    s.push_back(pick);
                    best = std::make_pair(sub->first + 1, std::move(s));
                }
            }
        }
        if (!best) return std::nullopt;
        taken.insert(taken.end(), best->second.begin(), best->second.end());
        return std::make_pair(cnt + best->first, std::move(taken));
    }
};

// ---- tier-2 cluster deletion: branch three ways on an induced P3 with a
// ---- vertex-disjoint P3 packing bound
struct CvdSearch {
    const BitGraph& g;
    long long nodes = 0;
    long long node_budget;

    // center u with two non-adjacent alive neighbors
    std::optional<std::array<int, 3>> find_p3(const Bits& alive) const {
        for (int u = alive.first(); u != -1; u = alive.next(u)) {
            Bits nb = g.adj[u] & alive;
            for (int a = nb.first(); a != -1; a = nb.next(a))
                for (int b = nb.next(a); b != -1; b = nb.next(b))
                    if (!g.adj[a].test(b)) return std::array<int, 3>{u, a, b};
        }
        return std::nullopt;
    }

    int packing_lb(const Bits& alive) const {
        Bits rest = alive;
        int count = 0;
        while (true) {
            std::optional<std::array<int, 3>> p3;
            for (int u = rest.first(); u != -1 && !p3; u = rest.next(u)) {
                Bits nb = g.adj[u] & rest;
                for (int a = nb.first(); a != -1 && !p3; a = nb.next(a))
                    for (int b = nb.next(a); b != -1; b = nb.next(b))
                        if (!g.adj[a].test(b)) {
                            p3 = std::array<int, 3>{u, a, b};
                            break;
                        }
            }
            if (!p3) break;
            for (int v : *p3) rest.reset(v);
            ++count;
        }
        return count;
    }

    std::optional<std::pair<int, VertexSet>> solve(Bits alive, int cutoff) {
        if (++nodes > node_budget) throw capacity_error("oracle node budget exhausted");
        if (cutoff < 0) return std::nullopt;
        auto p3 = find_p3(alive);
        if (!p3) return std::make_pair(0, VertexSet{});
        if (packing_lb(alive) > cutoff) return std::nullopt;
        std::optional<std::pair<int, VertexSet>> best;
        int cap = cutoff - 1;
        for (int v : *p3) {
            Bits rest = alive;
            rest.reset(v);
            if (auto sub = solve(rest, cap)) {
                VertexSet s = sub->second;
                s.push_back(v);
                best = std::make_pair(sub->first + 1, std::move(s));
                cap = sub->first - 1;  // later branches must strictly improve
                if (cap < 0) break;
            }
        }
        return best;
    }
};

}  // namespace

OracleValue brute_min_vertex_cover(const Graph& g, const OracleConfig& cfg) {
    const int n = g.num_vertices();
    if (n <= cfg.enum_limit) {
        auto edges = g.edge_list();
        auto r = enumerate_min_set(n, n, cfg.subset_budget, [&](const std::vector<char>& in_set) {
            return covers_all_edges(edges, in_set);
        });
        return *r;  // the full vertex set always covers
    }
    if (n > cfg.vc_bb_limit)
        throw capacity_error("vertex cover oracle guard: " + std::to_string(n) + " > " +
                             std::to_string(cfg.vc_bb_limit) + " vertices");
    BitGraph bg(g);
    VcOracleSearch search{bg, 0, cfg.node_budget};
    auto r = search.solve(Bits(n, true), n);
    OracleValue out;
    out.value = r->first;
    out.witness = sorted_unique(std::move(r->second));
    return out;
}

OracleValue brute_max_independent_set(const Graph& g, const OracleConfig& cfg) {
    const int n = g.num_vertices();
    if (n > cfg.enum_limit)
        throw capacity_error("independent set oracle guard: " + std::to_string(n) + " > " +
                             std::to_string(cfg.enum_limit) + " vertices");
    long long work_left = cfg.subset_budget;
    OracleValue out;
    for (int size = n; size >= 0; --size) {
        bool stopped =
            for_each_combination(n, size, work_left, [&](const std::vector<int>& pick) {
                for (size_t i = 0; i < pick.size(); ++i)
                    for (size_t j = i + 1; j < pick.size(); ++j)
                        if (g.has_edge(pick[i], pick[j])) return false;
                out.value = size;
                out.witness = pick;
                return true;
            });
        if (stopped) break;
    }
    OracleValue vc = brute_min_vertex_cover(g, cfg);
    if (out.value + vc.value != n)
        throw std::logic_error("independent set / vertex cover identity violated");
    return out;
}

OracleValue brute_min_fvs(const Graph& g, const OracleConfig& cfg) {
    const int n = g.num_vertices();
    if (n > cfg.enum_limit)
        throw capacity_error("feedback vertex set oracle guard: " + std::to_string(n) + " > " +
                             std::to_string(cfg.enum_limit) + " vertices");
    auto r = enumerate_min_set(n, n, cfg.subset_budget, [&](const std::vector<char>& in_set) {
        return alive_is_forest(g, in_set);
    });
    return *r;
}

OracleValue brute_cluster_deletion_number(const Graph& g, const OracleConfig& cfg) {
    const int n = g.num_vertices();
    if (n <= cfg.cvd_enum_limit) {
        auto r = enumerate_min_set(n, n, cfg.subset_budget, [&](const std::vector<char>& in_set) {
            return alive_is_cluster(g, in_set);
        });
        return *r;
    }
    if (n > cfg.cvd_bb_limit)
        throw capacity_error("cluster deletion oracle guard: " + std::to_string(n) + " > " +
                             std::to_string(cfg.cvd_bb_limit) + " vertices");
    BitGraph bg(g);
    CvdSearch search{bg, 0, cfg.node_budget};
    auto r = search.solve(Bits(n, true), n);
    OracleValue out;
    out.value = r->first;
    out.witness = sorted_unique(std::move(r->second));
    return out;
}

OracleValue brute_distance_to_kr_free(const Graph& g, int r, const OracleConfig& cfg) {
    if (r < 3) throw input_error("clique order must be at least 3");
    const int n = g.num_vertices();
    BitGraph bg(g);
    auto res = enumerate_min_set(n, n, cfg.subset_budget, [&](const std::vector<char>& in_set) {
        return alive_kr_free(bg, in_set, r);
    });
    OracleValue out = *res;
    if (r == 3 && n <= cfg.enum_limit) {
        OracleValue fvs = brute_min_fvs(g, cfg);
        if (out.value > fvs.value)
            throw std::logic_error("triangle deletion exceeds feedback vertex number");
    }
    return out;
}

std::optional<OracleValue> brute_min_vertex_cover_capped(const Graph& g, int cap,
                                                         const OracleConfig& cfg) {
    auto edges = g.edge_list();
    return enumerate_min_set(g.num_vertices(), cap, cfg.subset_budget,
                             [&](const std::vector<char>& in_set) {
                                 return covers_all_edges(edges, in_set);
                             });
}

std::optional<OracleValue> brute_min_fvs_capped(const Graph& g, int cap,
                                                const OracleConfig& cfg) {
    return enumerate_min_set(g.num_vertices(), cap, cfg.subset_budget,
                             [&](const std::vector<char>& in_set) {
                                 return alive_is_forest(g, in_set);
                             });
}

}  // namespace ag
