#ifndef AG_RANDOM_HPP
#define AG_RANDOM_HPP

#include <random>

#include "ag/graph.hpp"
#include "ag/io.hpp"

namespace ag {

using Rng = std::mt19937_64;

Graph erdos_renyi(Rng& rng, int n, double edge_prob);

// Random stacked triangulation (insert each new vertex into a random
// triangular face) followed by independent edge deletion; always planar.
Graph random_planar(Rng& rng, int n, double keep_prob = 0.7);

// Uniform clauses, random polarities. With distinct_vars, the three
// variables of every clause are distinct (requires num_vars >= 3).
CnfFormula random_3cnf(Rng& rng, int num_vars, int num_clauses, bool distinct_vars = true);

}  // namespace ag

#endif
