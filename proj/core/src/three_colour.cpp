#include <chromdp/chromatic.hpp>

#include <array>

namespace chromdp {

namespace
{
    auto is_bipartite(const Graph & g, VertexSet s) -> bool
    {
        for (VertexSet rest = s; ! rest.empty();) {
            int root = rest.lowest();
            VertexSet sides[2] = {VertexSet::singleton(root), {}};
            VertexSet frontier = sides[0];
            for (int layer = 1; ! frontier.empty(); ++layer) {
                VertexSet next;
                for (int x : frontier)
                    next |= g.open_neighbourhood(x) & s;
                next -= sides[0] | sides[1];
                sides[layer & 1] |= next;
                frontier = next;
            }
            for (const auto & side : sides)
                for (int x : side)
                    if (g.open_neighbourhood(x).intersects(side))
                        return false;
            rest -= sides[0] | sides[1];
        }
        return true;
    }

    class ThreeColouring
    {
    public:
        ThreeColouring(const Graph & g, VertexSet s) : graph_(g), s_(s) {}

        auto search(VertexSet uncoloured, int used) -> bool
        {
            if (uncoloured.empty())
                return true;

            // fewest usable colours first, then highest degree in s
            int best = -1, best_options = 4, best_degree = -1;
            unsigned best_mask = 0;
            for (int v : uncoloured) {
                auto [options, mask] = usable(v, used);
                if (options == 0)
                    return false;
                int degree = graph_.degree_in(v, s_);
                if (options < best_options || (options == best_options && degree > best_degree)) {
                    best = v;
                    best_options = options;
                    best_degree = degree;
                    best_mask = mask;
                }
            }

            for (int c = 0; c < 3; ++c) {
                if (! (best_mask >> c & 1U))
                    continue;
                classes_[c] = classes_[c].with(best);
                bool ok = search(uncoloured.without(best), c == used ? used + 1 : used);
                classes_[c] = classes_[c].without(best);
                if (ok)
                    return true;
            }
            return false;
        }

    private:
        // colours already in use that v may take, plus the next fresh one
        auto usable(int v, int used) const -> std::pair<int, unsigned>
        {
            int count = 0;
            unsigned mask = 0;
            for (int c = 0; c < used; ++c)
                if (! graph_.open_neighbourhood(v).intersects(classes_[c])) {
                    ++count;
                    mask |= 1U << c;
                }
            if (used < 3) {
                ++count;
                mask |= 1U << used;
            }
            return {count, mask};
        }

        const Graph & graph_;
        VertexSet s_;
        std::array<VertexSet, 3> classes_{};
    };
}

auto chi_at_most_3(const Graph & g, VertexSet s) -> std::optional<int>
{
    if (s.empty())
        return 0;
    if (g.is_independent(s))
        return 1;
    if (is_bipartite(g, s))
        return 2;
    if (ThreeColouring(g, s).search(s, 0))
        return 3;
    return std::nullopt;
}

}
