#include "ag/random.hpp"

#include <algorithm>
#include <array>

namespace ag {

Graph erdos_renyi(Rng& rng, int n, double edge_prob) {
    if (n < 0) throw input_error("vertex count must be nonnegative");
    std::bernoulli_distribution coin(edge_prob);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph random_planar(Rng& rng, int n, double keep_prob) {
    if (n < 0) throw input_error("vertex count must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    if (n >= 2) edges.emplace_back(0, 1);
    if (n >= 3) {
        edges.emplace_back(0, 2);
        edges.emplace_back(1, 2);
        std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 1, 2}};
        for (int v = 3; v < n; ++v) {
            std::uniform_int_distribution<size_t> pick(0, faces.size() - 1);
            size_t f = pick(rng);
            auto [a, b, c] = faces[f];
            edges.emplace_back(v, a);
            edges.emplace_back(v, b);
            edges.emplace_back(v, c);
            faces[f] = {v, a, b};
            faces.push_back({v, b, c});
            faces.push_back({v, a, c});
        }
    }
    std::bernoulli_distribution keep(keep_prob);
    std::vector<std::pair<int, int>> kept;
    for (auto e : edges)
        if (keep(rng)) kept.push_back(e);
    return Graph(n, kept);
}

CnfFormula random_3cnf(Rng& rng, int num_vars, int num_clauses, bool distinct_vars) {
    if (num_vars < (distinct_vars ? 3 : 1))
        throw input_error("too few variables for the requested clause shape");
    CnfFormula f;
    f.num_vars = num_vars;
    std::uniform_int_distribution<int> var(1, num_vars);
    std::bernoulli_distribution sign(0.5);
    for (int i = 0; i < num_clauses; ++i) {
        std::array<int, 3> vars{};
        if (distinct_vars) {
            do {
                for (auto& v : vars) v = var(rng);
            } while (vars[0] == vars[1] || vars[0] == vars[2] || vars[1] == vars[2]);
        } else {
            for (auto& v : vars) v = var(rng);
        }
        std::array<int, 3> clause{};
        for (int j = 0; j < 3; ++j) clause[j] = sign(rng) ? vars[j] : -vars[j];
        f.clauses.push_back(clause);
    }
    return f;
}

}  // namespace ag
