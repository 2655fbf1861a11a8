#include <chromdp/errors.hpp>
#include <chromdp/graph.hpp>

#include <cassert>
#include <string>

namespace chromdp {

auto Graph::from_edges(int n, std::span<const Edge> edges, int cap) -> Graph
{
    if (cap > VertexSet::max_vertices)
        cap = VertexSet::max_vertices;
    if (n < 0)
        throw parse_error("negative vertex count " + std::to_string(n));
    if (n > cap)
        throw capacity_error("graph has " + std::to_string(n) + " vertices, cap is " + std::to_string(cap));

    Graph g;
    g.closed_.resize(n);
    for (int v = 0; v < n; ++v)
        g.closed_[v] = VertexSet::singleton(v);

    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw parse_error("self-loop on vertex " + std::to_string(u));
        if (! g.closed_[u].contains(v)) {
            g.closed_[u] = g.closed_[u].with(v);
            g.closed_[v] = g.closed_[v].with(u);
            ++g.edge_count_;
        }
    }
    return g;
}

auto Graph::degree_in(int v, VertexSet s) const -> int
{
    assert(s.contains(v));
    return (open_neighbourhood(v) & s).size();
}

auto Graph::is_independent(VertexSet s) const -> bool
{
    for (int v : s)
        if (open_neighbourhood(v).intersects(s))
            return false;
    return true;
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    result.reserve(edge_count_);
    for (int u = 0; u < size(); ++u)
        for (int v : open_neighbourhood(u) - VertexSet::first_n(u + 1))
            result.emplace_back(u, v);
    return result;
}

auto Graph::induced(VertexSet s) const -> Graph
{
    std::vector<int> index(size(), -1);
    int next = 0;
    for (int v : s)
        index[v] = next++;

    std::vector<Edge> kept;
    for (auto [u, v] : edges())
        if (s.contains(u) && s.contains(v))
            kept.emplace_back(index[u], index[v]);
    return from_edges(next, kept);
}

auto is_proper_coloring(const Graph & g, const Coloring & c) -> bool
{
    if (static_cast<int>(c.colors.size()) != g.size() || c.num_colors < 0)
        return false;

    std::vector<bool> used(c.num_colors, false);
    for (int colour : c.colors) {
        if (colour < 0 || colour >= c.num_colors)
            return false;
        used[colour] = true;
    }
    for (bool u : used)
        if (! u)
            return false;

    for (auto [u, v] : g.edges())
        if (c.colors[u] == c.colors[v])
            return false;
    return true;
}

}
