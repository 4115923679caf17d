#include "ag/reductions.hpp"

#include <algorithm>
#include <cassert>

#include "ag/params.hpp"

namespace ag {

namespace {

bool clause_satisfied(const std::array<int, 3>& clause, const std::vector<bool>& assignment) {
    for (int lit : clause) {
        int var = lit > 0 ? lit : -lit;
        bool val = assignment[var - 1];
        if ((lit > 0) == val) return true;
    }
    return false;
}

}  // namespace

ReductionArtifact clique_to_vc_complement(const Graph& g, int k) {
    const int n = g.num_vertices();
    if (k < 0 || k > n) throw input_error("clique size must be in 0..n");
    ReductionArtifact art;
    art.graph = complement(g);
    art.budget = n - k;
    for (int v = 0; v < n; ++v) art.gadget_map.push_back({"source", v});
    art.claimed_params["k_bar"] = n - k;
    if (n > 0) {
        auto [lo_c, hi_c] = degree_profile(art.graph);
        auto [lo_g, hi_g] = degree_profile(g);
        art.claimed_params["min_degree_out"] = lo_c;
        art.claimed_params["max_degree_source"] = hi_g;
        art.claimed_params["param_above_min_degree"] = (n - k) - lo_c;
    }
    return art;
}

ReductionArtifact vc_to_fvs_triangles(const Graph& g, int ell) {
    const int n = g.num_vertices();
    auto src_edges = g.edge_list();
    ReductionArtifact art;
    std::vector<std::pair<int, int>> edges = src_edges;
    VertexSet edge_vertices;
    for (size_t i = 0; i < src_edges.size(); ++i) {
        int w = n + static_cast<int>(i);
        edges.emplace_back(src_edges[i].first, w);
        edges.emplace_back(src_edges[i].second, w);
        edge_vertices.push_back(w);
    }
    art.graph = Graph(n + static_cast<int>(src_edges.size()), edges);
    art.budget = ell;
    for (int v = 0; v < n; ++v) art.gadget_map.push_back({"source", v});
    for (size_t i = 0; i < src_edges.size(); ++i)
        art.gadget_map.push_back(
            {"edge", static_cast<int>(i), src_edges[i].first, src_edges[i].second});
    art.certificates["edge_vertices"] = edge_vertices;
    art.claimed_params["num_vertices"] = art.graph.num_vertices();
    return art;
}

ReductionArtifact is_to_vc_above_krfree(const Graph& g, int k, int r) {
    const int n = g.num_vertices();
    if (n < 1) throw input_error("source graph must have at least one vertex");
    if (k < 1) throw input_error("independent set target must be at least 1");
    if (r < 3) throw input_error("clique order must be at least 3");

    ReductionArtifact art;
    std::vector<std::pair<int, int>> edges;
    // block layout: k copies of V(G), then the A cliques, their leaves, the
    // B cliques, their leaves
    auto copy_vertex = [&](int i, int j) { return i * n + j; };
    const int a_base = n * k;
    const int a_size = (r - 2) * k;
    const int a_leaf_base = a_base + a_size;
    const int b_base = a_leaf_base + a_size;
    const int b_size = (r - 1) * (k + 1);
    const int b_leaf_base = b_base + b_size;
    const int total = b_leaf_base + b_size;

    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) art.gadget_map.push_back({"copy", i, j});
    for (int i = 0; i < k; ++i)
        for (int t = 0; t < r - 2; ++t) art.gadget_map.push_back({"block_a", i, t});
    for (int i = 0; i < k; ++i)
        for (int t = 0; t < r - 2; ++t) art.gadget_map.push_back({"leaf_a", i, t});
    for (int c = 0; c < k + 1; ++c)
        for (int t = 0; t < r - 1; ++t) art.gadget_map.push_back({"block_b", c, t});
    for (int c = 0; c < k + 1; ++c)
        for (int t = 0; t < r - 1; ++t) art.gadget_map.push_back({"leaf_b", c, t});

    // each copy induces a clique
    for (int i = 0; i < k; ++i)
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) edges.emplace_back(copy_vertex(i, p), copy_vertex(i, q));
    // across copies: same source vertex, and both orientations of each
    // source edge
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            for (int q = 0; q < n; ++q) edges.emplace_back(copy_vertex(i, q), copy_vertex(j, q));
            for (auto [p, q] : g.edge_list()) {
                edges.emplace_back(copy_vertex(i, p), copy_vertex(j, q));
                edges.emplace_back(copy_vertex(i, q), copy_vertex(j, p));
            }
        }
    // A_i: a clique of r-2 vertices joined to V_i, one leaf per vertex
    for (int i = 0; i < k; ++i) {
        int base = a_base + i * (r - 2);
        for (int t = 0; t < r - 2; ++t) {
            for (int t2 = t + 1; t2 < r - 2; ++t2) edges.emplace_back(base + t, base + t2);
            for (int j = 0; j < n; ++j) edges.emplace_back(base + t, copy_vertex(i, j));
            edges.emplace_back(base + t, a_leaf_base + i * (r - 2) + t);
        }
    }
    // B: k+1 cliques of r-1 vertices joined to every copy vertex, one leaf each
    for (int c = 0; c < k + 1; ++c) {
        int base = b_base + c * (r - 1);
        for (int t = 0; t < r - 1; ++t) {
            for (int t2 = t + 1; t2 < r - 1; ++t2) edges.emplace_back(base + t, base + t2);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < n; ++j) edges.emplace_back(base + t, copy_vertex(i, j));
            edges.emplace_back(base + t, b_leaf_base + c * (r - 1) + t);
        }
    }

    art.graph = Graph(total, edges);
    art.budget = static_cast<long long>(n - 1) * k + a_size + b_size;

    VertexSet deletion_set, leaves, block_a, block_b;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) deletion_set.push_back(copy_vertex(i, j));
    for (int v = a_base; v < a_leaf_base; ++v) block_a.push_back(v);
    for (int v = a_leaf_base; v < b_base; ++v) leaves.push_back(v);
    for (int v = b_base; v < b_leaf_base; ++v) block_b.push_back(v);
    for (int v = b_leaf_base; v < total; ++v) leaves.push_back(v);
    leaves = sorted_unique(std::move(leaves));
    art.certificates["designated_deletion_set"] = sorted_unique(std::move(deletion_set));
    art.certificates["leaves"] = leaves;
    art.certificates["block_a"] = sorted_unique(std::move(block_a));
    art.certificates["block_b"] = sorted_unique(std::move(block_b));

    art.claimed_params["ell"] = art.budget;
    long long ell_alt = static_cast<long long>(n - 1) * k + static_cast<long long>(leaves.size());
    art.claimed_params["ell_alt"] = ell_alt;
    if (art.budget != ell_alt) throw std::logic_error("leaf count mismatch in construction");
    art.claimed_params["deletion_set_size"] = static_cast<long long>(n) * k;
    art.claimed_params["num_vertices"] = total;
    return art;
}

ReductionArtifact sat3_to_vc_above_cvd(const CnfFormula& phi, bool extended) {
    for (const auto& clause : phi.clauses)
        for (int lit : clause) {
            int var = lit > 0 ? lit : -lit;
            if (var < 1 || var > phi.num_vars)
                throw input_error("literal out of range in clause");
        }

    CnfFormula padded = phi;
    int first_dummy_clause = static_cast<int>(phi.clauses.size());
    int first_dummy_var = phi.num_vars;
    if (extended) {
        // dummy clause over three fresh variables; always satisfiable by
        // setting any of them
        while (padded.clauses.size() % 3 != 0) {
            int y = padded.num_vars;
            padded.clauses.push_back({y + 1, y + 2, y + 3});
            padded.num_vars += 3;
        }
    }
    const int m = static_cast<int>(padded.clauses.size());
    const int n = padded.num_vars;

    ReductionArtifact art;
    std::vector<std::pair<int, int>> edges;
    auto clause_vertex = [&](int i, int r, int s) { return i * 21 + (r - 1) * 7 + (s - 1); };
    auto var_vertex = [&](int j, int r, int s) { return 21 * m + j * 6 + (r - 1) * 3 + (s - 1); };
    const int base_count = 21 * m + 6 * n;

    for (int i = 0; i < m; ++i) {
        const char* kind = i >= first_dummy_clause ? "dummy_clause_side" : "clause_side";
        for (int r = 1; r <= 3; ++r)
            for (int s = 1; s <= 7; ++s) art.gadget_map.push_back({kind, i, r, s});
    }
    for (int j = 0; j < n; ++j) {
        const char* kind = j >= first_dummy_var ? "dummy_variable_side" : "variable_side";
        for (int r = 1; r <= 2; ++r)
            for (int s = 1; s <= 3; ++s) art.gadget_map.push_back({kind, j, r, s});
    }

    // clause gadgets: complete tripartite 7+7+7
    for (int i = 0; i < m; ++i)
        for (int r = 1; r <= 3; ++r)
            for (int r2 = r + 1; r2 <= 3; ++r2)
                for (int s = 1; s <= 7; ++s)
                    for (int s2 = 1; s2 <= 7; ++s2)
                        edges.emplace_back(clause_vertex(i, r, s), clause_vertex(i, r2, s2));
    // variable gadgets: complete bipartite 3+3
    for (int j = 0; j < n; ++j)
        for (int s = 1; s <= 3; ++s)
            for (int s2 = 1; s2 <= 3; ++s2)
                edges.emplace_back(var_vertex(j, 1, s), var_vertex(j, 2, s2));
    // every clause side joins the variable side carrying the same literal
    for (int i = 0; i < m; ++i)
        for (int r = 1; r <= 3; ++r) {
            int lit = padded.clauses[i][r - 1];
            int j = (lit > 0 ? lit : -lit) - 1;
            int side = lit > 0 ? 1 : 2;
            for (int s = 1; s <= 7; ++s)
                for (int s2 = 1; s2 <= 3; ++s2)
                    edges.emplace_back(clause_vertex(i, r, s), var_vertex(j, side, s2));
        }

    VertexSet clause_verts, var_verts;
    for (int v = 0; v < 21 * m; ++v) clause_verts.push_back(v);
    for (int v = 21 * m; v < base_count; ++v) var_verts.push_back(v);
    art.certificates["clause_vertices"] = clause_verts;
    art.certificates["variable_vertices"] = var_verts;

    int total = base_count;
    if (extended) {
        const int t_count = 7 * m / 3 + n;  // triangles
        VertexSet t_verts, base_verts;
        for (int t = 0; t < t_count; ++t) {
            int base = base_count + 3 * t;
            for (int pos = 0; pos < 3; ++pos) {
                art.gadget_map.push_back({"t_triangle", t, pos});
                t_verts.push_back(base + pos);
            }
            edges.emplace_back(base, base + 1);
            edges.emplace_back(base, base + 2);
            edges.emplace_back(base + 1, base + 2);
            for (int v = 0; v < base_count; ++v)
                for (int pos = 0; pos < 3; ++pos) edges.emplace_back(v, base + pos);
        }
        total = base_count + 3 * t_count;
        for (int v = 0; v < base_count; ++v) base_verts.push_back(v);
        art.certificates["t_vertices"] = t_verts;
        art.certificates["cluster_deletion_set"] = base_verts;
        art.budget = 21LL * m + 6LL * n;
        art.claimed_params["t_size"] = 3LL * t_count;
        art.claimed_params["cluster_deletion_set_size"] = base_count;
    } else {
        art.budget = 14LL * m + 3LL * n;
        art.claimed_params["vc_equals_cvd"] = 1;
    }
    art.graph = Graph(total, edges);
    art.claimed_params["k"] = art.budget;
    art.claimed_params["m"] = m;
    art.claimed_params["n"] = n;
    art.claimed_params["m_source"] = static_cast<long long>(phi.clauses.size());
    art.claimed_params["n_source"] = phi.num_vars;
    art.claimed_params["num_vertices"] = total;
    return art;
}

ReductionArtifact fvs_to_fvs_below_vc(const Graph& g, int k) {
    const int n = g.num_vertices();
    if (g.num_edges() < 1) throw input_error("source graph must have at least one edge");
    if (k < 0 || k > n - 2) throw input_error("budget must be in 0..n-2");
    const int lambda = n - k - 2;

    ReductionArtifact art;
    std::vector<std::pair<int, int>> edges = g.edge_list();
    for (int v = 0; v < n; ++v) art.gadget_map.push_back({"source", v});
    for (int v = 0; v < n; ++v) {
        art.gadget_map.push_back({"leaf", v});
        edges.emplace_back(v, n + v);
    }
    for (int t = 0; t < lambda; ++t) {
        art.gadget_map.push_back({"universal", t});
        for (int v = 0; v < n; ++v) edges.emplace_back(2 * n + t, v);
    }
    art.graph = Graph(2 * n + lambda, edges);
    art.budget = n - 2;

    VertexSet leaves, universal, source;
    for (int v = 0; v < n; ++v) source.push_back(v);
    for (int v = n; v < 2 * n; ++v) leaves.push_back(v);
    for (int v = 2 * n; v < 2 * n + lambda; ++v) universal.push_back(v);
    art.certificates["source_copy"] = source;
    art.certificates["leaves"] = leaves;
    art.certificates["universal_set"] = universal;

    art.claimed_params["k_prime"] = n - 2;
    art.claimed_params["lambda"] = lambda;
    art.claimed_params["vc_out"] = n;
    art.claimed_params["ell"] = 2;
    art.claimed_params["num_vertices"] = 2 * n + lambda;
    return art;
}

VertexSet sat_cvd_cover_from_assignment(const CnfFormula& phi,
                                        const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != phi.num_vars)
        throw input_error("assignment size does not match variable count");
    const int m = static_cast<int>(phi.clauses.size());
    const int n = phi.num_vars;
    auto clause_vertex = [&](int i, int r, int s) { return i * 21 + (r - 1) * 7 + (s - 1); };
    auto var_vertex = [&](int j, int r, int s) { return 21 * m + j * 6 + (r - 1) * 3 + (s - 1); };

    VertexSet cover;
    for (int i = 0; i < m; ++i) {
        int satisfied_side = -1;
        for (int r = 1; r <= 3 && satisfied_side == -1; ++r) {
            int lit = phi.clauses[i][r - 1];
            int var = (lit > 0 ? lit : -lit) - 1;
            if ((lit > 0) == assignment[var]) satisfied_side = r;
        }
        if (satisfied_side == -1) throw input_error("assignment does not satisfy every clause");
        for (int r = 1; r <= 3; ++r) {
            if (r == satisfied_side) continue;
            for (int s = 1; s <= 7; ++s) cover.push_back(clause_vertex(i, r, s));
        }
    }
    for (int j = 0; j < n; ++j) {
        int side = assignment[j] ? 1 : 2;
        for (int s = 1; s <= 3; ++s) cover.push_back(var_vertex(j, side, s));
    }
    return sorted_unique(std::move(cover));
}

std::optional<std::vector<bool>> find_satisfying_assignment(const CnfFormula& phi, int var_limit) {
    if (phi.num_vars > var_limit)
        throw capacity_error("satisfiability search guard: " + std::to_string(phi.num_vars) +
                             " > " + std::to_string(var_limit) + " variables");
    std::vector<bool> assignment(phi.num_vars, false);
    for (std::uint64_t mask = 0; mask < (1ULL << phi.num_vars); ++mask) {
        for (int j = 0; j < phi.num_vars; ++j) assignment[j] = (mask >> j) & 1;
        bool ok = true;
        for (const auto& clause : phi.clauses)
            if (!clause_satisfied(clause, assignment)) {
                ok = false;
                break;
            }
        if (ok) return assignment;
    }
    return std::nullopt;
}

}  // namespace ag
