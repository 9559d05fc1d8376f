#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "spextree/canonical.hpp"
#include "spextree/constructions.hpp"
#include "spextree/error.hpp"
#include "spextree/graph.hpp"

using namespace spextree;

TEST_CASE("graph rejects loops, duplicates and bad endpoints") {
    Graph g(3);
    CHECK(g.add_edge(0, 1));
    CHECK_FALSE(g.add_edge(1, 0));
    CHECK(g.size() == 1);
    CHECK_THROWS_AS(g.add_edge(2, 2), RangeError);
    CHECK_THROWS_AS(g.add_edge(0, 3), RangeError);
    CHECK_THROWS_AS(g.add_edge(-1, 0), RangeError);
}

TEST_CASE("edges are sorted pairs") {
    Graph g(4);
    g.add_edge(3, 1);
    g.add_edge(2, 0);
    g.add_edge(1, 0);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}});
    CHECK(g.degree_sequence() == std::vector<int>{2, 2, 1, 1});
}

TEST_CASE("join examples") {
    // K2 v 4K1 is exactly the S(6,2,0) construction.
    CHECK(join(complete_graph(2), empty_graph(4)) == construct_S(6, 2, 0));
    // K1 v (K2 + 7K1) is S(10,1,1).
    CHECK(join(complete_graph(1), matching_graph(9, 1)) == construct_S(10, 1, 1));
    CHECK(ref::brute_isomorphic(join(empty_graph(2), empty_graph(2)), cycle_graph(4)));

    std::mt19937_64 rng(7);
    for (int t = 0; t < 30; ++t) {
        Graph a = ref::random_graph(1 + t % 5, 0.5, rng), b = ref::random_graph(1 + t % 7, 0.4, rng);
        Graph j = join(a, b);
        CHECK(j.order() == a.order() + b.order());
        CHECK(j.size() == a.size() + b.size() + static_cast<std::size_t>(a.order() * b.order()));
    }
}

TEST_CASE("diameter and components") {
    CHECK(diameter(path_graph(7)) == 6);
    CHECK(diameter(cycle_graph(7)) == 3);
    CHECK(diameter(complete_graph(5)) == 1);
    CHECK(diameter(empty_graph(2)) == -1);
    Graph g = disjoint_union(path_graph(2), complete_graph(3));
    CHECK(g.components() == std::vector<int>{0, 0, 1, 1, 1});
    CHECK_FALSE(g.is_connected());
}

TEST_CASE("graph6 known strings") {
    CHECK(to_graph6(empty_graph(0)) == "?");
    CHECK(to_graph6(complete_graph(4)) == "C~");
    CHECK(to_graph6(complete_graph(5)) == "D~{");
    CHECK(to_graph6(path_graph(3)) == "Bg");
    CHECK(from_graph6("C~") == complete_graph(4));
    // Orders of 63 and above use the long header.
    Graph big = path_graph(70);
    std::string code = to_graph6(big);
    CHECK(code.substr(0, 4) == "~?@E");
    CHECK(from_graph6(code) == big);
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        Graph g = ref::random_graph(t % 40, 0.3, rng);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("graph6 rejects bad input") {
    CHECK_THROWS_AS(from_graph6("C"), ParseError);
    CHECK_THROWS_AS(from_graph6("C~~"), ParseError);
    CHECK_THROWS_AS(from_graph6("C\x01"), ParseError);
}

TEST_CASE("edge list round trip keeps isolated vertices") {
    Graph g(6);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    Graph back = parse_edge_list(to_edge_list(g));
    CHECK(back == g);
    CHECK(back.order() == 6);
}

TEST_CASE("edge list parsing") {
    Graph g = parse_edge_list("# a triangle\n0 1\n1 2  # inline\n\n2 0\n");
    CHECK(g.order() == 3);
    CHECK(g.size() == 3);
    try {
        parse_edge_list("0 1\n1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_edge_list("0 1\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("# order 2\n0 5\n"), ParseError);
}

TEST_CASE("construct, edge list, parse gives the same canonical form") {
    for (Graph g : {construct_S(12, 3, 2), construct_K_ab_p(3, 7, 2), construct_G_nl(15, 9)}) {
        Graph back = parse_edge_list(to_edge_list(g));
        CHECK(canonical_form(back).code == canonical_form(g).code);
    }
}
