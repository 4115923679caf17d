#include "ag/graph.hpp"

#include <algorithm>
#include <numeric>

namespace ag {

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw input_error("vertex count must be nonnegative");
    adj_.resize(n_);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw input_error("edge endpoint " + std::to_string(u < 0 || u >= n_ ? u : v) +
                              " out of range 0.." + std::to_string(n_ - 1));
        if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        m_ += static_cast<long long>(nb.size());
    }
    m_ /= 2;
}

bool Graph::has_edge(int u, int v) const {
    assert(0 <= u && u < n_ && 0 <= v && v < n_);
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
}

Graph build_graph(int n, std::span<const std::pair<int, int>> edges) {
    return Graph(n, edges);
}

Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    return Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph complement(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        auto nb = g.neighbors(u);
        size_t i = 0;
        for (int v = u + 1; v < n; ++v) {
            while (i < nb.size() && nb[i] < v) ++i;
            if (i < nb.size() && nb[i] == v) continue;
            edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    InducedSubgraph out;
    out.from_original.assign(g.num_vertices(), -1);
    for (int v : keep) {
        if (v < 0 || v >= g.num_vertices())
            throw input_error("vertex " + std::to_string(v) + " out of range");
        if (out.from_original[v] != -1)
            throw input_error("duplicate vertex " + std::to_string(v) + " in set");
        out.from_original[v] = 0;  // mark, number below in sorted order
    }
    for (int v = 0; v < g.num_vertices(); ++v)
        if (out.from_original[v] == 0) {
            out.from_original[v] = static_cast<int>(out.to_original.size());
            out.to_original.push_back(v);
        }
    std::vector<std::pair<int, int>> edges;
    for (int v : out.to_original)
        for (int w : g.neighbors(v))
            if (v < w && out.from_original[w] != -1)
                edges.emplace_back(out.from_original[v], out.from_original[w]);
    out.graph = Graph(static_cast<int>(out.to_original.size()), edges);
    return out;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& drop) {
    std::vector<char> dead(g.num_vertices(), 0);
    for (int v : drop) {
        if (v < 0 || v >= g.num_vertices())
            throw input_error("vertex " + std::to_string(v) + " out of range");
        dead[v] = 1;
    }
    VertexSet keep;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!dead[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

bool is_acyclic(const Graph& g) {
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
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            int ru = find(u), rv = find(v);
            if (ru == rv) return false;
            parent[ru] = rv;
        }
    return true;
}

bool is_cluster(const Graph& g) {
    // no induced P3: the neighborhood of every vertex is a clique
    for (int u = 0; u < g.num_vertices(); ++u) {
        auto nb = g.neighbors(u);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                if (!g.has_edge(nb[i], nb[j])) return false;
    }
    return true;
}

namespace {

bool extend_clique(const Graph& g, const std::vector<int>& cand, int need) {
    if (need == 0) return true;
    if (static_cast<int>(cand.size()) < need) return false;
    for (size_t i = 0; i + need <= cand.size(); ++i) {
        int v = cand[i];
        std::vector<int> next;
        for (size_t j = i + 1; j < cand.size(); ++j)
            if (g.has_edge(v, cand[j])) next.push_back(cand[j]);
        if (extend_clique(g, next, need - 1)) return true;
    }
    return false;
}

}  // namespace

bool has_kr(const Graph& g, int r) {
    if (r < 1) throw input_error("clique order must be >= 1");
    if (r == 1) return g.num_vertices() >= 1;
    if (r == 2) return g.num_edges() >= 1;
    std::vector<int> all(g.num_vertices());
    std::iota(all.begin(), all.end(), 0);
    return extend_clique(g, all, r);
}

VertexSet sorted_unique(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool is_sorted_vertex_set(const Graph& g, const VertexSet& s) {
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.num_vertices()) return false;
        if (i > 0 && s[i] <= s[i - 1]) return false;
    }
    return true;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace ag
