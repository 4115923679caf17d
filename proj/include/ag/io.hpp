#ifndef AG_IO_HPP
#define AG_IO_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "ag/graph.hpp"

namespace ag {

// 3-CNF formula. Literals are DIMACS-signed: +v / -v with v in 1..num_vars.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;
};

// Accepts DIMACS graph files ("p edge <n> <m>", "e <u> <v>", 1-indexed,
// comments "c ...") and plain edge lists ("<n> <m>" then m lines "<u> <v>",
// 0-indexed). The format is detected from the first meaningful line.
Graph parse_graph(std::string_view text);

// DIMACS CNF; every clause must have exactly three literals.
CnfFormula parse_cnf(std::string_view text);

std::string to_dimacs(const Graph& g);

std::string read_file(const std::string& path);
Graph read_graph_file(const std::string& path);
CnfFormula read_cnf_file(const std::string& path);

}  // namespace ag

#endif
