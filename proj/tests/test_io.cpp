#include <doctest.h>

#include "ag/io.hpp"
#include "ag/random.hpp"
#include "test_util.hpp"

using namespace ag;
using namespace agtest;

TEST_CASE("dimacs graph parsing") {
    Graph k3 = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(k3 == complete_graph(3));

    Graph iso = parse_graph("c two isolated vertices\np edge 2 0\n");
    CHECK(iso.num_vertices() == 2);
    CHECK(iso.num_edges() == 0);

    CHECK_THROWS_AS(parse_graph("e 1 5\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("p edge 3 1\ne 1 9\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("p edge 3 1\ne 2 2\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("p huh 3 1\n"), parse_error);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_graph("c comment\np edge 3 2\ne 1 2\ne 1 9\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("plain edge list parsing") {
    Graph p3 = parse_graph("3 2\n0 1\n1 2\n");
    CHECK(p3 == path_graph(3));
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), parse_error);       // fewer edges than declared
    CHECK_THROWS_AS(parse_graph("3 1\n0 3\n"), parse_error);       // out of range
}

TEST_CASE("dimacs round trip") {
    Rng rng(23);
    for (int i = 0; i < 30; ++i) {
        Graph g = erdos_renyi(rng, 1 + static_cast<int>(rng() % 12), 0.4);
        CHECK(parse_graph(to_dimacs(g)) == g);
    }
}

TEST_CASE("cnf parsing") {
    CnfFormula f = parse_cnf("p cnf 3 1\n1 2 3 0\n");
    CHECK(f.num_vars == 3);
    REQUIRE(f.clauses.size() == 1);
    CHECK(f.clauses[0] == std::array<int, 3>{1, 2, 3});

    // width rule: exactly three literals per clause
    CHECK_THROWS_AS(parse_cnf("p cnf 2 1\n1 -2 0\n"), input_error);

    // duplicate literals are accepted
    CnfFormula dup = parse_cnf("p cnf 1 1\n1 1 -1 0\n");
    CHECK(dup.clauses[0] == std::array<int, 3>{1, 1, -1});

    CHECK_THROWS_AS(parse_cnf("p cnf 2 1\n1 2 5 0\n"), parse_error);  // literal out of range
    CHECK_THROWS_AS(parse_cnf("1 2 3 0\n"), parse_error);             // header required
    CHECK_THROWS_AS(parse_cnf("p cnf 3 1\n1 2 3\n"), parse_error);    // missing terminator
}

TEST_CASE("cnf clauses may span lines") {
    CnfFormula f = parse_cnf("p cnf 4 2\n1 2\n3 0 2 -3 4 0\n");
    REQUIRE(f.clauses.size() == 2);
    CHECK(f.clauses[1] == std::array<int, 3>{2, -3, 4});
}
