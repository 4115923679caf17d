#include "ag/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ag {

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> meaningful_lines(std::string_view text) {
    std::vector<Line> out;
    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        ++lineno;
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) {
            if (pos > text.size()) break;
            continue;
        }
        if (line[first] == 'c' || line[first] == '%' || line[first] == '#') continue;
        out.push_back({lineno, std::string(line)});
        if (pos > text.size()) break;
    }
    return out;
}

Graph parse_dimacs_graph(const std::vector<Line>& lines) {
    int n = -1;
    long long m = -1;
    std::vector<std::pair<int, int>> edges;
    bool got_header = false;
    for (const auto& ln : lines) {
        std::istringstream iss(ln.text);
        std::string tag;
        iss >> tag;
        if (tag == "p") {
            std::string kind;
            iss >> kind >> n >> m;
            if (!iss || (kind != "edge" && kind != "edges" && kind != "col") || n < 0 || m < 0)
                throw parse_error("malformed problem header", ln.number);
            got_header = true;
        } else if (tag == "e") {
            if (!got_header) throw parse_error("edge before problem header", ln.number);
            int u, v;
            iss >> u >> v;
            if (!iss) throw parse_error("malformed edge line", ln.number);
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error("vertex id out of range 1.." + std::to_string(n), ln.number);
            if (u == v) throw parse_error("self-loop at vertex " + std::to_string(u), ln.number);
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw parse_error("unrecognized line type '" + tag + "'", ln.number);
        }
    }
    if (!got_header) throw parse_error("missing problem header", lines.empty() ? 1 : lines.back().number);
    return Graph(n, edges);
}

Graph parse_edge_list(const std::vector<Line>& lines) {
    std::istringstream head(lines[0].text);
    int n;
    long long m;
    head >> n >> m;
    if (!head || n < 0 || m < 0) throw parse_error("expected '<n> <m>' header", lines[0].number);
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 1; i < lines.size(); ++i) {
        std::istringstream iss(lines[i].text);
        int u, v;
        iss >> u >> v;
        if (!iss) throw parse_error("malformed edge line", lines[i].number);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("vertex id out of range 0.." + std::to_string(n - 1), lines[i].number);
        if (u == v) throw parse_error("self-loop at vertex " + std::to_string(u), lines[i].number);
        edges.emplace_back(u, v);
    }
    if (static_cast<long long>(edges.size()) != m)
        throw parse_error("declared " + std::to_string(m) + " edges, found " +
                              std::to_string(edges.size()),
                          lines.back().number);
    return Graph(n, edges);
}

}  // namespace

Graph parse_graph(std::string_view text) {
    auto lines = meaningful_lines(text);
    if (lines.empty()) throw parse_error("empty graph input", 1);
    char first = lines[0].text[lines[0].text.find_first_not_of(" \t")];
    if (first == 'p' || first == 'e') return parse_dimacs_graph(lines);
    return parse_edge_list(lines);
}

CnfFormula parse_cnf(std::string_view text) {
    auto lines = meaningful_lines(text);
    CnfFormula f;
    long long declared_clauses = -1;
    bool got_header = false;
    std::vector<int> current;
    for (const auto& ln : lines) {
        std::istringstream iss(ln.text);
        if (!got_header) {
            std::string tag, kind;
            iss >> tag >> kind >> f.num_vars >> declared_clauses;
            if (!iss || tag != "p" || kind != "cnf" || f.num_vars < 0 || declared_clauses < 0)
                throw parse_error("malformed cnf header", ln.number);
            got_header = true;
            continue;
        }
        int lit;
        while (iss >> lit) {
            if (lit == 0) {
                if (current.size() != 3)
                    throw input_error("clause " + std::to_string(f.clauses.size() + 1) + " has " +
                                      std::to_string(current.size()) + " literals, expected 3");
                f.clauses.push_back({current[0], current[1], current[2]});
                current.clear();
            } else {
                int var = lit > 0 ? lit : -lit;
                if (var > f.num_vars)
                    throw parse_error("literal " + std::to_string(lit) + " out of range", ln.number);
                current.push_back(lit);
            }
        }
    }
    if (!got_header) throw parse_error("missing cnf header", 1);
    if (!current.empty())
        throw parse_error("unterminated clause at end of input",
                          lines.empty() ? 1 : lines.back().number);
    if (static_cast<long long>(f.clauses.size()) != declared_clauses)
        throw input_error("declared " + std::to_string(declared_clauses) + " clauses, found " +
                          std::to_string(f.clauses.size()));
    return f;
}

std::string to_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edge_list()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph read_graph_file(const std::string& path) { return parse_graph(read_file(path)); }

CnfFormula read_cnf_file(const std::string& path) { return parse_cnf(read_file(path)); }

}  // namespace ag
