#include <chromdp/oracles.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chromdp::oracles {

namespace
{
    auto guard(int size) -> void
    {
        if (size > max_scan_vertices)
            throw std::length_error("brute-force scan limited to " + std::to_string(max_scan_vertices)
                    + " vertices, got " + std::to_string(size));
    }

    auto members(VertexSet s) -> std::vector<int>
    {
        std::vector<int> out;
        for (int v = 0; v < VertexSet::max_vertices; ++v)
            if (s.contains(v))
                out.push_back(v);
        return out;
    }

    auto independent(const Graph & g, const std::vector<int> & vs) -> bool
    {
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                if (g.adjacent(vs[a], vs[b]))
                    return false;
        return true;
    }

    class Colourer
    {
    public:
        Colourer(const Graph & g, std::vector<int> order) : g_(g), order_(std::move(order)), colour_(g.size(), -1) {}

        auto colourable(int colours) -> bool { return extend(0, 0, colours); }

    private:
        auto extend(std::size_t pos, int used, int colours) -> bool
        {
            if (pos == order_.size())
                return true;
            int v = order_[pos];
            int limit = used < colours ? used + 1 : colours;
            for (int c = 0; c < limit; ++c) {
                bool clash = false;
                for (std::size_t q = 0; q < pos && ! clash; ++q)
                    clash = colour_[order_[q]] == c && g_.adjacent(order_[q], v);
                if (clash)
                    continue;
                colour_[v] = c;
                if (extend(pos + 1, c == used ? used + 1 : used, colours))
                    return true;
                colour_[v] = -1;
            }
            return false;
        }

        const Graph & g_;
        std::vector<int> order_;
        std::vector<int> colour_;
    };
}

auto brute_force_all_mis(const Graph & g, VertexSet s) -> std::vector<VertexSet>
{
    auto vs = members(s);
    guard(static_cast<int>(vs.size()));

    std::vector<VertexSet> result;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << vs.size()); ++pick) {
        std::vector<int> chosen;
        std::uint64_t bits = 0;
        for (std::size_t j = 0; j < vs.size(); ++j)
            if (pick >> j & 1U) {
                chosen.push_back(vs[j]);
                bits |= std::uint64_t{1} << vs[j];
            }
        if (! independent(g, chosen))
            continue;

        bool maximal = true;
        for (std::size_t j = 0; j < vs.size() && maximal; ++j) {
            if (pick >> j & 1U)
                continue;
            auto grown = chosen;
            grown.push_back(vs[j]);
            if (independent(g, grown))
                maximal = false;
        }
        if (maximal)
            result.emplace_back(bits);
    }
    std::sort(result.begin(), result.end());
    return result;
}

auto brute_force_chromatic(const Graph & g, VertexSet s) -> int
{
    auto vs = members(s);
    Colourer colourer(g, vs);
    for (int c = 0;; ++c)
        if (colourer.colourable(c))
            return c;
}

auto brute_force_chromatic(const Graph & g) -> int
{
    return brute_force_chromatic(g, g.vertices());
}

auto moon_moser(const Graph & g) -> MoonMoser
{
    guard(g.size());
    MoonMoser r;
    r.mis_count = brute_force_all_mis(g, g.vertices()).size();
    std::uint64_t cube = r.mis_count * r.mis_count * r.mis_count;
    std::uint64_t three_to_n = 1;
    for (int i = 0; i < g.size(); ++i)
        three_to_n *= 3;
    r.holds = cube <= three_to_n;
    r.tight = cube == three_to_n;
    return r;
}

auto moon_moser_check(const Graph & g) -> bool
{
    return moon_moser(g).holds;
}

}
