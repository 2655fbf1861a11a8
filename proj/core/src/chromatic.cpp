#include <chromdp/chromatic.hpp>
#include <chromdp/errors.hpp>

#include <stdexcept>
#include <string>

namespace chromdp {

DpTable::DpTable(int n) : n_(n), entries_(std::size_t{1} << n, static_cast<value_type>(n + 1))
{
}

auto chromatic_number(const Graph & g, const DpOptions & options) -> DpResult
{
    const int n = g.size();
    const int cap = options.max_vertices < max_dp_cap ? options.max_vertices : max_dp_cap;
    if (n > cap)
        throw capacity_error("subset table for " + std::to_string(n) + " vertices exceeds the cap of "
                + std::to_string(cap) + " (2^" + std::to_string(cap) + " bytes)");

    DpResult result;
    result.table = DpTable(n);
    auto & table = result.table;
    const auto everything = g.vertices();
    const std::uint64_t subsets = std::uint64_t{1} << n;

    for (std::uint64_t bits = 0; bits < subsets; ++bits) {
        VertexSet s{bits};
        if (auto chi = chi_at_most_3(g, s))
            table.set(s, *chi);
    }

    const int inf = table.infinity();
    for (std::uint64_t bits = 0; bits < subsets; ++bits) {
        VertexSet s{bits};
        const int here = table[s];
        if (3 <= here && here < inf) {
            int budget = s.size() / here;
            result.stats += small_mis(g, everything - s, budget, [&](VertexSet i) {
                table.relax(s | i, here + 1);
            });
        }
        if (options.on_visit)
            options.on_visit(table, s);
    }

    result.chi = table[everything];
    return result;
}

auto extract_coloring(const Graph & g, const DpTable & table) -> Coloring
{
    if (table.vertex_count() != g.size())
        throw std::invalid_argument("table does not belong to this graph");

    Coloring result;
    result.colors.assign(g.size(), -1);
    VertexSet s = g.vertices();

    for (std::uint64_t bits = table.size(); bits-- > 0 && ! s.empty();) {
        VertexSet t{bits};
        if (t.is_proper_subset_of(s) && table[s - t] == 1 && table[t] == table[s] - 1) {
            for (int v : s - t)
                result.colors[v] = result.num_colors;
            ++result.num_colors;
            s = t;
        }
    }

    if (! s.empty())
        throw std::logic_error("table admits no colouring witness; was it produced by chromatic_number?");
    return result;
}

auto solve(const Graph & g, const DpOptions & options) -> Solution
{
    auto dp = chromatic_number(g, options);
    Solution result;
    result.chi = dp.chi;
    result.coloring = extract_coloring(g, dp.table);
    result.stats = dp.stats;
    result.table_entries = dp.table.size();
    result.table_bytes = dp.table.bytes();
    return result;
}

}
