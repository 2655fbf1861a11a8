#include "test_support.hpp"

#include <chromdp/dimacs.hpp>
#include <chromdp/errors.hpp>
#include <chromdp/generators.hpp>
#include <chromdp/graph.hpp>

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace chromdp;

TEST_CASE("vertex sets mirror their integer value")
{
    VertexSet s{0b1011};
    CHECK(s.size() == 3);
    CHECK(s.lowest() == 0);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(2));
    CHECK(s.without(0) == VertexSet{0b1010});
    CHECK((s - VertexSet{0b0011}) == VertexSet{0b1000});
    CHECK(VertexSet::first_n(64).size() == 64);
    CHECK(VertexSet::first_n(0).empty());

    std::vector<int> members(s.begin(), s.end());
    CHECK(members == std::vector<int>{0, 1, 3});
}

TEST_CASE("proper subsets have smaller values")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        VertexSet t{rng() & 0xffffffffULL};
        VertexSet s = t & VertexSet{rng()};
        if (s.is_proper_subset_of(t))
            CHECK(s.bits() < t.bits());
        else
            CHECK(s == t);
    }
}

TEST_CASE("closed neighbourhoods are reflexive and symmetric")
{
    for (const auto & g : testing::gnp_corpus(30, 0, 20, 3)) {
        int adjacency_bits = 0;
        for (int v = 0; v < g.size(); ++v) {
            CHECK(g.closed_neighbourhood(v).contains(v));
            CHECK_FALSE(g.adjacent(v, v));
            CHECK(g.closed_neighbourhood(v).is_subset_of(g.vertices()));
            for (int u = 0; u < g.size(); ++u)
                CHECK(g.adjacent(u, v) == g.adjacent(v, u));
            adjacency_bits += g.open_neighbourhood(v).size();
        }
        CHECK(adjacency_bits == 2 * g.edge_count());
    }
}

TEST_CASE("degree in an induced subgraph")
{
    auto k3 = gen_complete(3);
    CHECK(k3.degree_in(0, VertexSet{0b111}) == 2);
    CHECK(k3.degree_in(0, VertexSet{0b011}) == 1);
    CHECK(k3.degree_in(0, VertexSet{0b001}) == 0);
    auto empty = Graph::from_edges(4, {});
    CHECK(empty.degree_in(2, empty.vertices()) == 0);
}

TEST_CASE("edge lists reject loops and bad endpoints")
{
    std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph::from_edges(3, loop), parse_error);
    std::vector<Edge> far{{0, 3}};
    CHECK_THROWS_AS(Graph::from_edges(3, far), parse_error);
    CHECK_THROWS_AS(Graph::from_edges(65, {}), capacity_error);
    CHECK_THROWS_AS(Graph::from_edges(10, {}, 8), capacity_error);
}

TEST_CASE("induced subgraph renumbers in order")
{
    auto c5 = gen_cycle(5);
    auto p = c5.induced(VertexSet{0b11011});  // 0,1,3,4 -> path 3-4-0-1
    CHECK(p.size() == 4);
    CHECK(p.edge_count() == 3);
    CHECK(p.adjacent(0, 1));
    CHECK(p.adjacent(2, 3));
    CHECK(p.adjacent(3, 0));
}

TEST_CASE("dimacs parsing")
{
    SUBCASE("triangle")
    {
        auto g = from_dimacs_string("c a comment\np edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
        CHECK(g.size() == 3);
        CHECK(g.edge_count() == 3);
        CHECK(g == gen_complete(3));
    }
    SUBCASE("isolated vertices")
    {
        auto g = from_dimacs_string("p edge 2 0");
        CHECK(g.size() == 2);
        CHECK(g.edge_count() == 0);
    }
    SUBCASE("duplicate edges merge")
    {
        auto g = from_dimacs_string("p edge 3 2\ne 1 2\ne 1 2\n");
        CHECK(g.edge_count() == 1);
        CHECK(g.adjacent(0, 1));
    }
    SUBCASE("reversed duplicate merges too")
    {
        CHECK(from_dimacs_string("p edge 2 2\ne 1 2\ne 2 1\n").edge_count() == 1);
    }
    SUBCASE("errors")
    {
        CHECK_THROWS_AS(from_dimacs_string("e 1 2\n"), parse_error);
        CHECK_THROWS_AS(from_dimacs_string("c nothing\n"), parse_error);
        CHECK_THROWS_AS(from_dimacs_string("p edge 2 0\np edge 2 0\n"), parse_error);
        CHECK_THROWS_AS(from_dimacs_string("p edge 3 1\ne 1 4\n"), parse_error);
        CHECK_THROWS_AS(from_dimacs_string("p edge 3 1\ne 0 1\n"), parse_error);
        CHECK_THROWS_AS(from_dimacs_string("p edge 3 1\ne 2 2\n"), parse_error);
        CHECK_THROWS_AS(from_dimacs_string("p edge 3 1\ne 1 x\n"), parse_error);
        CHECK_THROWS_AS(from_dimacs_string("p edge 3 1\ne 1 2 3\n"), parse_error);
        CHECK_THROWS_AS(from_dimacs_string("p col 3 0\n"), parse_error);
        CHECK_THROWS_AS(from_dimacs_string("p edge 3 0\nx 1\n"), parse_error);
        CHECK_THROWS_AS(from_dimacs_string("p edge 33 0\n"), capacity_error);
        CHECK(from_dimacs_string("p edge 40 0\n", 64).size() == 40);
    }
}

TEST_CASE("dimacs writer sorts edges and round-trips")
{
    std::vector<Edge> edges{{2, 0}, {1, 2}, {0, 1}};
    auto g = Graph::from_edges(3, edges);
    CHECK(to_dimacs_string(g) == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");

    for (const auto & h : testing::gnp_corpus(40, 0, 32, 11))
        CHECK(from_dimacs_string(to_dimacs_string(h)) == h);
}

TEST_CASE("generators")
{
    CHECK(gen_triangles_k4s(1, 0) == gen_complete(3));
    CHECK(gen_triangles_k4s(0, 1) == gen_complete(4));
    auto mixed = gen_triangles_k4s(1, 1);
    CHECK(mixed.size() == 7);
    CHECK(mixed.edge_count() == 9);
    CHECK_FALSE(mixed.adjacent(2, 3));
    CHECK_THROWS_AS(gen_triangles_k4s(11, 0), capacity_error);

    auto petersen = gen_named("petersen");
    CHECK(petersen.size() == 10);
    CHECK(petersen.edge_count() == 15);
    for (int v = 0; v < 10; ++v)
        CHECK(petersen.open_neighbourhood(v).size() == 3);

    auto groetzsch = gen_named("groetzsch");
    CHECK(groetzsch.size() == 11);
    CHECK(groetzsch.edge_count() == 20);
    CHECK_THROWS_AS(gen_named("heawood"), std::invalid_argument);

    CHECK(gen_complete(4).edge_count() == 6);
    CHECK(gen_cycle(7).edge_count() == 7);
    CHECK(gen_complete_bipartite(3, 3).edge_count() == 9);
    CHECK(gen_gnp(5, 0.0, 99).edge_count() == 0);
    CHECK(gen_gnp(6, 1.0, 99) == gen_complete(6));
    CHECK_THROWS_AS(gen_gnp(5, 1.5, 0), std::invalid_argument);
}

TEST_CASE("gnp is reproducible and matches an independent mt19937_64 replay")
{
    CHECK(gen_gnp(20, 0.5, 123) == gen_gnp(20, 0.5, 123));
    CHECK_FALSE(gen_gnp(20, 0.5, 123) == gen_gnp(20, 0.5, 124));

    // frozen from a from-scratch MT19937-64 replay of the documented sampling rule
    auto expected = from_dimacs_string("p edge 10 24\n"
            "e 1 5\ne 1 7\ne 1 9\ne 1 10\ne 2 3\ne 2 4\ne 3 4\ne 3 5\ne 3 6\ne 3 8\ne 3 9\ne 3 10\n"
            "e 4 5\ne 4 6\ne 4 8\ne 4 10\ne 5 7\ne 5 10\ne 6 9\ne 6 10\ne 7 8\ne 7 10\ne 8 10\ne 9 10\n");
    CHECK(gen_gnp(10, 0.5, 42) == expected);
}

TEST_CASE("proper colouring predicate")
{
    auto k3 = gen_complete(3);
    CHECK(is_proper_coloring(k3, Coloring{{0, 1, 2}, 3}));
    CHECK_FALSE(is_proper_coloring(k3, Coloring{{0, 1, 1}, 2}));
    CHECK(is_proper_coloring(Graph::from_edges(2, {}), Coloring{{0, 0}, 1}));
    CHECK_FALSE(is_proper_coloring(k3, Coloring{{0, 1, 3}, 4}));  // colour 2 unused
    CHECK_FALSE(is_proper_coloring(k3, Coloring{{0, 1}, 2}));
    CHECK_FALSE(is_proper_coloring(k3, Coloring{{0, 1, 5}, 3}));
    CHECK(is_proper_coloring(Graph{}, Coloring{}));
}
