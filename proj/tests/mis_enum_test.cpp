#include "test_support.hpp"

#include <chromdp/generators.hpp>
#include <chromdp/mis_bound.hpp>
#include <chromdp/mis_enum.hpp>
#include <chromdp/oracles.hpp>

#include <doctest.h>

#include <cmath>
#include <set>

using namespace chromdp;

namespace
{
    // small_mis with the soundness contract asserted on every emitted set
    auto checked_emissions(const Graph & g, VertexSet s, int k) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> out;
        small_mis(g, s, k, [&](VertexSet i) {
            CHECK(i.is_subset_of(s));
            CHECK(g.is_independent(i));
            CHECK(i.size() <= k);
            out.push_back(i);
        });
        return out;
    }

    auto oracle_small(const Graph & g, VertexSet s, int k) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> out;
        for (auto i : oracles::brute_force_all_mis(g, s))
            if (i.size() <= k)
                out.push_back(i);
        return out;
    }
}

TEST_CASE("bound values")
{
    CHECK(mis_bound(3, 1).to_string() == "3");
    CHECK(mis_bound(4, 1).to_string() == "4");
    CHECK(mis_bound(7, 2).to_string() == "12");
    CHECK(mis_bound(0, 0).to_string() == "1");
    CHECK(mis_bound(12, 4).to_string() == "81");
    // 3^-1 * 4^2
    CHECK(mis_bound(5, 1).to_string() == "16/3");
    // 3^4 * 4^-3 = 81/64
    CHECK(mis_bound(0, 1).to_string() == "81/64");
    CHECK(mis_bound(0, 1).approx() == doctest::Approx(81.0 / 64.0));
    CHECK(mis_bound(10, 0).to_string() == "1048576/59049");
}

TEST_CASE("bound is an integer exactly when both exponents are nonnegative")
{
    for (std::uint64_t n = 0; n <= 40; ++n)
        for (std::uint64_t k = 0; k <= n; ++k) {
            auto b = mis_bound(n, k);
            CHECK(b.numerator > 0);
            CHECK(b.denominator > 0);
            bool integral = 4 * k >= n && n >= 3 * k;
            CHECK((b.denominator == 1) == integral);
            CHECK(gcd(b.numerator, b.denominator) == 1);
            // never below one
            CHECK(b.numerator >= b.denominator);
        }
    // 3^3000 / 4^2000
    CHECK(mis_bound(1000, 1000).approx() == doctest::Approx(1.753e227).epsilon(1e-3));
    CHECK(std::isinf(mis_bound(10000, 10000).approx()));
    CHECK(mis_bound(10000, 0).to_string().find('/') != std::string::npos);
}

TEST_CASE("bound admits exactly the counts at or below it")
{
    auto b = mis_bound(5, 1);  // 16/3
    CHECK(b.admits(5));
    CHECK_FALSE(b.admits(6));
    CHECK(mis_bound(7, 2).admits(12));
    CHECK_FALSE(mis_bound(7, 2).admits(13));
}

TEST_CASE("branch selection follows the fixed tie-breaking")
{
    SUBCASE("highest degree, lowest index")
    {
        std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {4, 1}, {4, 2}, {4, 3}, {4, 5}};
        auto g = Graph::from_edges(6, edges);
        auto b = choose_branch(g, g.vertices(), 2);
        CHECK(b.kind == BranchKind::high_degree);
        CHECK(b.v == 4);
        b = choose_branch(g, g.vertices().without(5), 2);
        CHECK(b.v == 0);
    }
    SUBCASE("degree one")
    {
        auto p = testing::path_graph(4);
        auto b = choose_branch(p, p.vertices(), 2);
        CHECK(b.kind == BranchKind::degree_one);
        CHECK(b.v == 0);
        CHECK(b.u == 1);
    }
    SUBCASE("isolated")
    {
        auto g = Graph::from_edges(3, {});
        auto b = choose_branch(g, VertexSet{0b110}, 1);
        CHECK(b.kind == BranchKind::isolated);
        CHECK(b.v == 1);
    }
    SUBCASE("long cycle preferred over an earlier triangle")
    {
        std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 3}};
        auto g = Graph::from_edges(7, edges);
        auto b = choose_branch(g, g.vertices(), 1);
        CHECK(b.kind == BranchKind::chain);
        CHECK(b.v == 3);
        CHECK(b.u == 4);
        CHECK(b.w == 6);
        CHECK_FALSE(g.adjacent(b.u, b.w));
    }
    SUBCASE("triangles only")
    {
        auto g = gen_triangles_k4s(2, 0);
        auto b = choose_branch(g, g.vertices(), 2);
        CHECK(b.kind == BranchKind::chain);
        CHECK(b.v == 0);
        CHECK(b.u == 1);
        CHECK(b.w == 2);
        CHECK(choose_branch(g, g.vertices(), 1).kind == BranchKind::prune);
    }
}

TEST_CASE("small_mis on the triangle emits the three singletons")
{
    auto k3 = gen_complete(3);
    auto sets = checked_emissions(k3, k3.vertices(), 1);
    std::set<VertexSet> got(sets.begin(), sets.end());
    CHECK(got == std::set<VertexSet>{VertexSet{1}, VertexSet{2}, VertexSet{4}});
}

TEST_CASE("budget zero emits the accumulated prefix")
{
    auto k3 = gen_complete(3);
    auto sets = checked_emissions(k3, k3.vertices(), 0);
    REQUIRE(sets.size() == 1);
    CHECK(sets[0].empty());
    CHECK(small_mis_filtered(gen_complete(4), gen_complete(4).vertices(), 0).empty());
    CHECK(small_mis_filtered(Graph{}, VertexSet{}, 0) == std::vector<VertexSet>{VertexSet{}});
}

TEST_CASE("filtered listings on small fixtures")
{
    auto k4 = gen_complete(4);
    CHECK(small_mis_filtered(k4, k4.vertices(), 1).size() == 4);

    auto mixed = gen_triangles_k4s(1, 1);
    CHECK(small_mis_filtered(mixed, mixed.vertices(), 2).size() == 12);

    // every maximal independent set of P4 has two vertices
    auto p4 = testing::path_graph(4);
    CHECK(small_mis_filtered(p4, p4.vertices(), 1).empty());
    CHECK(small_mis_filtered(p4, p4.vertices(), 2).size() == 3);

    auto two_triangles = gen_triangles_k4s(2, 0);
    CHECK(small_mis_filtered(two_triangles, two_triangles.vertices(), 2).size() == 9);

    auto c5 = gen_cycle(5);
    CHECK(small_mis_filtered(c5, c5.vertices(), 2).size() == 5);
}

TEST_CASE("maximality predicate")
{
    auto k3 = gen_complete(3);
    CHECK(is_maximal_independent(k3, k3.vertices(), VertexSet{1}));
    auto p3 = testing::path_graph(3);
    CHECK_FALSE(is_maximal_independent(p3, p3.vertices(), VertexSet{1}));
    CHECK(is_maximal_independent(p3, p3.vertices(), VertexSet{0b101}));
    CHECK(is_maximal_independent(k3, VertexSet{}, VertexSet{}));
    CHECK_FALSE(is_maximal_independent(k3, k3.vertices(), VertexSet{0b11}));
    // maximal within s even if not within the whole graph
    CHECK(is_maximal_independent(p3, VertexSet{0b011}, VertexSet{0b001}));
}

TEST_CASE("enumeration matches brute force on induced subgraphs")
{
    std::mt19937_64 rng(5);
    for (const auto & g : testing::gnp_corpus(60, 1, 12, 21)) {
        VertexSet s = g.vertices() & VertexSet{rng()};
        for (int k = 0; k <= s.size(); ++k) {
            checked_emissions(g, s, k);
            auto fast = small_mis_filtered(g, s, k);
            CHECK(fast == oracle_small(g, s, k));
            CHECK(mis_bound(s.size(), k).admits(fast.size()));
        }
    }
}

TEST_CASE("tightness family meets the bound exactly with a bounded call count")
{
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + b <= 4; ++b) {
            auto g = gen_triangles_k4s(a, b);
            EnumStats stats;
            auto sets = small_mis_filtered(g, g.vertices(), a + b, &stats);
            auto bound = mis_bound(g.size(), a + b);
            CHECK(bound.denominator == 1);
            CHECK(bound.numerator == sets.size());
            CHECK(stats.recursive_calls <= 10 * sets.size());
            CHECK(stats.emitted_sets >= sets.size());
        }
}
