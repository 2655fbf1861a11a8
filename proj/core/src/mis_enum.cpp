#include <chromdp/mis_enum.hpp>

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace chromdp {

namespace
{
    // connected component of v inside s
    auto component_of(const Graph & g, VertexSet s, int v) -> VertexSet
    {
        VertexSet seen = VertexSet::singleton(v), frontier = seen;
        while (! frontier.empty()) {
            VertexSet next;
            for (int x : frontier)
                next |= g.closed_neighbourhood(x) & s;
            frontier = next - seen;
            seen |= next;
        }
        return seen;
    }

    // v with its two neighbours inside s, lower-index neighbour first
    auto chain_around(const Graph & g, VertexSet s, int v) -> Branch
    {
        auto nbrs = g.open_neighbourhood(v) & s;
        int u = nbrs.lowest();
        int w = nbrs.without(u).lowest();
        return Branch{BranchKind::chain, u, v, w};
    }
}

auto choose_branch(const Graph & g, VertexSet s, int k) -> Branch
{
    int high = -1, high_degree = 2, one = -1, zero = -1;
    for (int v : s) {
        int d = g.degree_in(v, s);
        if (d > high_degree) {
            high = v;
            high_degree = d;
        }
        else if (d == 1 && one < 0)
            one = v;
        else if (d == 0 && zero < 0)
            zero = v;
    }

    if (high >= 0)
        return Branch{BranchKind::high_degree, -1, high, -1};
    if (one >= 0)
        return Branch{BranchKind::degree_one, (g.open_neighbourhood(one) & s).lowest(), one, -1};
    if (zero >= 0)
        return Branch{BranchKind::isolated, -1, zero, -1};

    // every vertex has degree two, so s is a disjoint union of cycles
    for (VertexSet rest = s; ! rest.empty();) {
        int v = rest.lowest();
        auto cycle = component_of(g, s, v);
        if (cycle.size() >= 4)
            return chain_around(g, s, v);
        rest -= cycle;
    }

    if (3 * static_cast<long long>(k) >= s.size())
        return chain_around(g, s, s.lowest());
    return Branch{};
}

auto is_maximal_independent(const Graph & g, VertexSet s, VertexSet i) -> bool
{
    if (! i.is_subset_of(s) || ! g.is_independent(i))
        return false;
    for (int v : s - i)
        if (! g.open_neighbourhood(v).intersects(i))
            return false;
    return true;
}

auto small_mis_filtered(const Graph & g, VertexSet s, int k, EnumStats * stats) -> std::vector<VertexSet>
{
    if (k < 0)
        throw std::invalid_argument("size budget must be nonnegative");

    std::unordered_set<VertexSet> seen;
    auto run_stats = small_mis(g, s, k, [&](VertexSet i) {
        if (is_maximal_independent(g, s, i))
            seen.insert(i);
    });
    if (stats)
        *stats += run_stats;

    std::vector<VertexSet> result(seen.begin(), seen.end());
    std::sort(result.begin(), result.end());
    return result;
}

}
