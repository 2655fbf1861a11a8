#pragma once

#include <chromdp/vertex_set.hpp>

#include <span>
#include <utility>
#include <vector>

namespace chromdp {

using Edge = std::pair<int, int>;

/// Default cap on the vertex count accepted by parsers and generators. Graphs
/// may hold up to VertexSet::max_vertices vertices when a caller asks for it.
inline constexpr int default_vertex_cap = 32;

/// Immutable simple undirected graph stored as closed-neighbourhood bitmasks:
/// closed_neighbourhood(v) holds v's neighbours together with v itself.
class Graph
{
public:
    Graph() = default;

    /// Builds the simple graph on n vertices (0-based) with the given edges.
    /// Duplicate edges are merged. Throws parse_error on a self-loop or an
    /// endpoint outside 0..n-1, and capacity_error when n exceeds `cap`.
    static auto from_edges(int n, std::span<const Edge> edges, int cap = VertexSet::max_vertices) -> Graph;

    [[nodiscard]] auto size() const noexcept -> int { return static_cast<int>(closed_.size()); }
    [[nodiscard]] auto edge_count() const noexcept -> int { return edge_count_; }
    [[nodiscard]] auto vertices() const noexcept -> VertexSet { return VertexSet::first_n(size()); }

    [[nodiscard]] auto closed_neighbourhood(int v) const -> VertexSet { return closed_[v]; }
    [[nodiscard]] auto open_neighbourhood(int v) const -> VertexSet { return closed_[v].without(v); }
    [[nodiscard]] auto adjacent(int u, int v) const -> bool { return u != v && closed_[u].contains(v); }

    /// Degree of v in the subgraph induced by s; v must be a member of s.
    [[nodiscard]] auto degree_in(int v, VertexSet s) const -> int;

    /// True iff no edge has both endpoints in s.
    [[nodiscard]] auto is_independent(VertexSet s) const -> bool;

    /// Edges (u, v) with u < v in lexicographic order.
    [[nodiscard]] auto edges() const -> std::vector<Edge>;

    /// The subgraph induced by s, with vertices renumbered in increasing order.
    [[nodiscard]] auto induced(VertexSet s) const -> Graph;

    friend auto operator==(const Graph &, const Graph &) -> bool = default;

private:
    std::vector<VertexSet> closed_;
    int edge_count_ = 0;
};

/// Per-vertex colour assignment with colours 0..num_colors-1.
struct Coloring
{
    std::vector<int> colors;
    int num_colors = 0;

    friend auto operator==(const Coloring &, const Coloring &) -> bool = default;
};

/// True iff c has one entry per vertex, every edge is bichromatic, and every
/// colour in 0..num_colors-1 is used.
auto is_proper_coloring(const Graph & g, const Coloring & c) -> bool;

}
