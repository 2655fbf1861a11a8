#include <chromdp/errors.hpp>
#include <chromdp/generators.hpp>

#include <random>
#include <stdexcept>
#include <string>

namespace chromdp {

namespace
{
    auto check_size(long long n, int cap) -> void
    {
        if (n < 0)
            throw std::invalid_argument("negative vertex count");
        if (n > cap || n > VertexSet::max_vertices)
            throw capacity_error("generator needs " + std::to_string(n) + " vertices, cap is " + std::to_string(cap));
    }

    auto add_clique(std::vector<Edge> & edges, int first, int size) -> void
    {
        for (int u = first; u < first + size; ++u)
            for (int v = u + 1; v < first + size; ++v)
                edges.emplace_back(u, v);
    }
}

auto gen_triangles_k4s(int triangles, int k4s, int cap) -> Graph
{
    if (triangles < 0 || k4s < 0)
        throw std::invalid_argument("component counts must be nonnegative");
    long long n = 3LL * triangles + 4LL * k4s;
    check_size(n, cap);

    std::vector<Edge> edges;
    int next = 0;
    for (int i = 0; i < triangles; ++i, next += 3)
        add_clique(edges, next, 3);
    for (int i = 0; i < k4s; ++i, next += 4)
        add_clique(edges, next, 4);
    return Graph::from_edges(static_cast<int>(n), edges, cap);
}

auto gen_complete(int n, int cap) -> Graph
{
    check_size(n, cap);
    std::vector<Edge> edges;
    add_clique(edges, 0, n);
    return Graph::from_edges(n, edges, cap);
}

auto gen_cycle(int n, int cap) -> Graph
{
    check_size(n, cap);
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    if (n >= 3)
        edges.emplace_back(n - 1, 0);
    return Graph::from_edges(n, edges, cap);
}

auto gen_complete_bipartite(int left, int right, int cap) -> Graph
{
    if (left < 0 || right < 0)
        throw std::invalid_argument("negative side size");
    check_size(static_cast<long long>(left) + right, cap);
    std::vector<Edge> edges;
    for (int u = 0; u < left; ++u)
        for (int v = 0; v < right; ++v)
            edges.emplace_back(u, left + v);
    return Graph::from_edges(left + right, edges, cap);
}

auto gen_named(std::string_view name) -> Graph
{
    std::vector<Edge> edges;
    if (name == "petersen") {
        // outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);
            edges.emplace_back(5 + i, 5 + (i + 2) % 5);
            edges.emplace_back(i, 5 + i);
        }
        return Graph::from_edges(10, edges);
    }
    if (name == "groetzsch") {
        // Mycielskian of C5: cycle 0..4, shadows 5..9, hub 10
        for (int i = 0; i < 5; ++i) {
            int next = (i + 1) % 5, prev = (i + 4) % 5;
            edges.emplace_back(i, next);
            edges.emplace_back(5 + i, next);
            edges.emplace_back(5 + i, prev);
            edges.emplace_back(5 + i, 10);
        }
        return Graph::from_edges(11, edges);
    }
    throw std::invalid_argument("unknown named graph '" + std::string(name) + "'");
}

auto gen_gnp(int n, double p, std::uint64_t seed, int cap) -> Graph
{
    if (! (p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("edge probability must lie in [0, 1]");
    check_size(n, cap);

    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (draw < p)
                edges.emplace_back(u, v);
        }
    return Graph::from_edges(n, edges, cap);
}

}
