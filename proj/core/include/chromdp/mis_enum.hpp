#pragma once

#include <chromdp/graph.hpp>

#include <cassert>
#include <cstdint>
#include <type_traits>
#include <vector>

namespace chromdp {

struct EnumStats
{
    std::uint64_t recursive_calls = 0;
    std::uint64_t emitted_sets = 0;

    auto operator+=(const EnumStats & o) noexcept -> EnumStats &
    {
        recursive_calls += o.recursive_calls;
        emitted_sets += o.emitted_sets;
        return *this;
    }
};

/// Which rule the enumerator applies to a subproblem (s, k) with s nonempty
/// and k >= 1, and the vertices it branches on.
enum class BranchKind
{
    high_degree,  ///< v has degree >= 3: exclude v, or take v
    degree_one,   ///< v has degree 1 with neighbour u: take u, or take v
    isolated,     ///< v has degree 0: take v
    chain,        ///< u-v-w path of degree-2 vertices: take u, take v, or take w and drop u
    prune         ///< disjoint triangles with 3k < |s|: no maximal set fits the budget
};

struct Branch
{
    BranchKind kind = BranchKind::prune;
    int u = -1;
    int v = -1;
    int w = -1;
};

/// Picks the branching rule for (s, k). Ties: the high-degree rule takes the
/// maximum degree, lowest index; degree-one and isolated take the lowest
/// index; the chain rule walks the first cycle of length >= 4 (ordered by
/// lowest vertex) so that u and w are nonadjacent, falling back to the
/// lowest triangle. Requires s nonempty and k >= 1.
auto choose_branch(const Graph & g, VertexSet s, int k) -> Branch;

namespace detail
{
    template <typename Sink>
    class SmallMisSearch
    {
    public:
        SmallMisSearch(const Graph & g, Sink & sink) : graph_(g), sink_(sink) {}

        auto run(VertexSet s, VertexSet taken, int k) -> void
        {
            ++stats.recursive_calls;
            if (s.empty() || k == 0) {
                ++stats.emitted_sets;
                sink_(taken);
                return;
            }

            auto b = choose_branch(graph_, s, k);
            auto take = [&](int x, VertexSet rest) { run(rest, taken.with(x), k - 1); };
            auto nbhd = [&](int x) { return graph_.closed_neighbourhood(x); };

            switch (b.kind) {
                case BranchKind::high_degree:
                    run(s.without(b.v), taken, k);
                    take(b.v, s - nbhd(b.v));
                    break;
                case BranchKind::degree_one:
                    take(b.u, s - nbhd(b.u));
                    take(b.v, s - nbhd(b.v));
                    break;
                case BranchKind::isolated:
                    take(b.v, s.without(b.v));
                    break;
                case BranchKind::chain:
                    take(b.u, s - nbhd(b.u));
                    take(b.v, s - nbhd(b.v));
                    take(b.w, s - nbhd(b.w).with(b.u));
                    break;
                case BranchKind::prune:
                    break;
            }
        }

        EnumStats stats;

    private:
        const Graph & graph_;
        Sink & sink_;
    };
}

/// Lists the maximal independent subsets of the subgraph induced by s that
/// have at most k vertices, calling sink(VertexSet) for each. Every maximal
/// such set is reported at least once; some non-maximal independent sets and
/// some duplicates may be reported too, but every reported set is independent
/// and has at most k vertices. With k = 0 the empty set is reported.
template <typename Sink>
auto small_mis(const Graph & g, VertexSet s, int k, Sink && sink) -> EnumStats
{
    assert(k >= 0 && s.is_subset_of(g.vertices()));
    detail::SmallMisSearch<std::remove_reference_t<Sink>> search(g, sink);
    search.run(s, VertexSet{}, k);
    return search.stats;
}

/// True iff i is an independent subset of s to which no vertex of s can be
/// added without breaking independence.
auto is_maximal_independent(const Graph & g, VertexSet s, VertexSet i) -> bool;

/// Exactly the maximal independent subsets of s with at most k vertices,
/// deduplicated and sorted by integer value.
auto small_mis_filtered(const Graph & g, VertexSet s, int k, EnumStats * stats = nullptr) -> std::vector<VertexSet>;

}
