#pragma once

#include <chromdp/graph.hpp>

#include <cstdint>
#include <string_view>

namespace chromdp {

/// Disjoint union of `triangles` copies of K3 followed by `k4s` copies of K4.
/// With k = triangles + k4s this graph has exactly 3^triangles * 4^k4s
/// maximal independent sets, all of size k.
auto gen_triangles_k4s(int triangles, int k4s, int cap = default_vertex_cap) -> Graph;

auto gen_complete(int n, int cap = default_vertex_cap) -> Graph;

/// C_n for n >= 3; n = 0, 1, 2 give the empty graph, K1 and K2.
auto gen_cycle(int n, int cap = default_vertex_cap) -> Graph;

auto gen_complete_bipartite(int left, int right, int cap = default_vertex_cap) -> Graph;

/// "petersen" or "groetzsch"; throws std::invalid_argument otherwise.
auto gen_named(std::string_view name) -> Graph;

/// Erdos-Renyi G(n, p). Pairs (u, v), u < v, are visited in lexicographic
/// order; each draws one 64-bit word from std::mt19937_64 seeded with `seed`
/// and keeps the edge iff (word >> 11) * 2^-53 < p. The result is therefore
/// identical on every platform.
auto gen_gnp(int n, double p, std::uint64_t seed, int cap = default_vertex_cap) -> Graph;

}
