#pragma once

#include <chromdp/graph.hpp>
#include <chromdp/mis_enum.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace chromdp {

/// Largest vertex count the subset DP accepts without an explicit override.
inline constexpr int default_dp_cap = 26;
/// Hard ceiling for the override: 2^28 one-byte entries, 256 MiB.
inline constexpr int max_dp_cap = 28;

/// chi(s) when it is at most 3, std::nullopt otherwise. Decided by emptiness,
/// edgelessness, a bipartiteness sweep and finally exact 3-colouring by
/// backtracking.
auto chi_at_most_3(const Graph & g, VertexSet s) -> std::optional<int>;

/// One byte per vertex subset, indexed by the integer value of the subset.
/// Entries are upper bounds on the chromatic number of the induced subgraph;
/// infinity() (= n + 1) means no bound is known.
class DpTable
{
public:
    using value_type = std::uint8_t;

    DpTable() : entries_(1, 0) {}
    explicit DpTable(int n);

    [[nodiscard]] auto vertex_count() const noexcept -> int { return n_; }
    [[nodiscard]] auto infinity() const noexcept -> int { return n_ + 1; }
    [[nodiscard]] auto size() const noexcept -> std::size_t { return entries_.size(); }
    [[nodiscard]] auto bytes() const noexcept -> std::size_t { return entries_.size() * sizeof(value_type); }

    [[nodiscard]] auto operator[](VertexSet s) const -> int { return entries_[s.bits()]; }
    auto set(VertexSet s, int value) -> void { entries_[s.bits()] = static_cast<value_type>(value); }

    /// Lowers the entry for s to value if that is smaller.
    auto relax(VertexSet s, int value) -> void
    {
        auto & e = entries_[s.bits()];
        if (value < e)
            e = static_cast<value_type>(value);
    }

private:
    int n_ = 0;
    std::vector<value_type> entries_;
};

struct DpOptions
{
    /// Reject graphs with more vertices than this; at most max_dp_cap.
    int max_vertices = default_dp_cap;

    /// Called after each subset s has been visited by the main loop.
    std::function<void(const DpTable &, VertexSet)> on_visit;
};

struct DpResult
{
    int chi = 0;
    DpTable table;
    EnumStats stats;
};

/// Chromatic number by dynamic programming over all 2^n vertex subsets.
/// Entries start at chi(s) for subsets with chi(s) <= 3. Subsets are then
/// visited in increasing integer order; each s with 3 <= table[s] < infinity
/// is extended by every maximal independent set i of V \ s with
/// |i| <= |s| / table[s], lowering table[s | i] to table[s] + 1.
/// Throws capacity_error before allocating when n exceeds the cap.
auto chromatic_number(const Graph & g, const DpOptions & options = {}) -> DpResult;

/// Optimal colouring recovered from a completed table by scanning t downward
/// from 2^n - 1 and peeling off s \ t whenever t is a proper subset of the
/// current s, s \ t is independent (entry 1) and table[t] = table[s] - 1.
auto extract_coloring(const Graph & g, const DpTable & table) -> Coloring;

struct Solution
{
    int chi = 0;
    Coloring coloring;
    EnumStats stats;
    std::size_t table_entries = 0;
    std::size_t table_bytes = 0;
};

auto solve(const Graph & g, const DpOptions & options = {}) -> Solution;

}
