#ifndef AG_TEST_UTIL_HPP
#define AG_TEST_UTIL_HPP

#include <vector>

#include "ag/graph.hpp"

namespace agtest {

inline ag::Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return ag::Graph(n, e);
}

inline ag::Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return ag::Graph(n, e);
}

inline ag::Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return ag::Graph(n, e);
}

// center 0, leaves 1..leaves
inline ag::Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return ag::Graph(leaves + 1, e);
}

inline ag::Graph petersen_graph() {
    std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                       {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                                       {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}};
    return ag::Graph(10, e);
}

inline ag::Graph grid_graph(int rows, int cols) {
    std::vector<std::pair<int, int>> e;
    auto id = [&](int i, int j) { return i * cols + j; };
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (j + 1 < cols) e.emplace_back(id(i, j), id(i, j + 1));
            if (i + 1 < rows) e.emplace_back(id(i, j), id(i + 1, j));
        }
    return ag::Graph(rows * cols, e);
}

inline ag::Graph disjoint_union(const ag::Graph& a, const ag::Graph& b) {
    std::vector<std::pair<int, int>> e = a.edge_list();
    for (auto [u, v] : b.edge_list()) e.emplace_back(u + a.num_vertices(), v + a.num_vertices());
    return ag::Graph(a.num_vertices() + b.num_vertices(), e);
}

}  // namespace agtest

#endif
