#pragma once

#include <chromdp/graph.hpp>

#include <cstdint>
#include <vector>

/// Deliberately naive reference implementations. Nothing here calls into the
/// enumerator or the subset DP; only the Graph type is shared.
namespace chromdp::oracles {

inline constexpr int max_scan_vertices = 20;

/// Every maximal independent subset of s, by testing all 2^|s| subsets.
/// Sorted by integer value. Throws std::length_error when |s| > 20.
auto brute_force_all_mis(const Graph & g, VertexSet s) -> std::vector<VertexSet>;

/// Smallest c admitting a proper c-colouring of the subgraph induced by s,
/// found by backtracking with the first vertex fixed to colour 0 and new
/// colours introduced in order.
auto brute_force_chromatic(const Graph & g, VertexSet s) -> int;
auto brute_force_chromatic(const Graph & g) -> int;

struct MoonMoser
{
    std::uint64_t mis_count = 0;
    bool holds = false;  ///< count^3 <= 3^n
    bool tight = false;  ///< count^3 == 3^n
};

/// Compares the number of maximal independent sets against 3^(n/3) exactly,
/// by cubing the count. Throws std::length_error when n > 20.
auto moon_moser(const Graph & g) -> MoonMoser;
auto moon_moser_check(const Graph & g) -> bool;

}
