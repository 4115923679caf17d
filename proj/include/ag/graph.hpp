#ifndef AG_GRAPH_HPP
#define AG_GRAPH_HPP

#include <cassert>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ag {

// Bad user input (out-of-range ids, malformed parameters).
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text; carries the 1-based line number.
class parse_error : public input_error {
public:
    parse_error(const std::string& msg, int line)
        : input_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A configured size/work guard was exceeded. Guards are explicit: we never
// fall back to an approximation silently.
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised by solvers when a caller-imposed node/time limit runs out.
class budget_exceeded_error : public capacity_error {
public:
    using capacity_error::capacity_error;
};

// Vertex ids are dense integers 0..n-1. Vertex sets are sorted and
// duplicate-free throughout.
using VertexSet = std::vector<int>;

// Simple undirected loopless graph, immutable after construction.
// Neighbor lists are sorted; adjacency queries are O(log deg).
class Graph {
public:
    Graph() = default;

    // Duplicate edges collapse to one; self-loops and out-of-range ids are
    // rejected.
    Graph(int n, std::span<const std::pair<int, int>> edges);

    int num_vertices() const { return n_; }
    long long num_edges() const { return m_; }

    std::span<const int> neighbors(int v) const {
        assert(0 <= v && v < n_);
        return adj_[v];
    }
    int degree(int v) const {
        assert(0 <= v && v < n_);
        return static_cast<int>(adj_[v].size());
    }
    bool has_edge(int u, int v) const;

    // All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edge_list() const;

    bool operator==(const Graph& other) const;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> adj_;
};

Graph build_graph(int n, std::span<const std::pair<int, int>> edges);
Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges);

Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;    // new id -> old id
    std::vector<int> from_original;  // old id -> new id, -1 if dropped
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& drop);

bool is_acyclic(const Graph& g);

// True iff every connected component is a clique (no induced P3).
bool is_cluster(const Graph& g);

// True iff g contains a clique on r vertices (r >= 1).
bool has_kr(const Graph& g, int r);

// Helpers for the VertexSet convention.
VertexSet sorted_unique(VertexSet s);
bool is_sorted_vertex_set(const Graph& g, const VertexSet& s);
VertexSet set_minus(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);

}  // namespace ag

#endif
