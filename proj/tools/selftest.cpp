#include "selftest.hpp"
#include "commands.hpp"

#include <chromdp/chromatic.hpp>
#include <chromdp/dimacs.hpp>
#include <chromdp/generators.hpp>
#include <chromdp/mis_bound.hpp>
#include <chromdp/mis_enum.hpp>
#include <chromdp/oracles.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace chromdp::cli {

namespace
{
    // A property check returns a description of the violation, or nothing.
    using Check = std::function<std::optional<std::string>(const Graph &)>;

    auto without_edge(const Graph & g, std::size_t skip) -> Graph
    {
        auto edges = g.edges();
        edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(skip));
        return Graph::from_edges(g.size(), edges);
    }

    // greedy vertex-then-edge deletion while the check keeps failing
    auto shrink(Graph g, const Check & check) -> Graph
    {
        for (bool progress = true; progress;) {
            progress = false;
            for (int v = 0; v < g.size() && ! progress; ++v) {
                auto smaller = g.induced(g.vertices().without(v));
                if (check(smaller)) {
                    g = smaller;
                    progress = true;
                }
            }
            for (std::size_t e = 0; e < static_cast<std::size_t>(g.edge_count()) && ! progress; ++e) {
                auto smaller = without_edge(g, e);
                if (check(smaller)) {
                    g = smaller;
                    progress = true;
                }
            }
        }
        return g;
    }

    class Runner
    {
    public:
        Runner(const SelftestOptions & options, std::ostream & out, std::ostream & err) :
            options_(options), out_(out), err_(err), rng_(options.seed)
        {
        }

        auto random_graph(int max_n) -> Graph
        {
            static constexpr double densities[] = {0.2, 0.5, 0.8};
            int n = std::uniform_int_distribution<int>(1, max_n)(rng_);
            double p = densities[std::uniform_int_distribution<int>(0, 2)(rng_)];
            return gen_gnp(n, p, rng_());
        }

        auto mis_listing(const Graph & g, int k) const -> std::vector<VertexSet>
        {
            auto sets = small_mis_filtered(g, g.vertices(), k);
            if (options_.fault == Fault::drop_first_mis && ! sets.empty())
                sets.erase(sets.begin());
            return sets;
        }

        auto chromatic(const Graph & g) const -> Solution
        {
            auto s = solve(g);
            if (options_.fault == Fault::chromatic_off_by_one)
                ++s.chi;
            return s;
        }

        // true when every case passed
        auto suite(const char * name, int cases, const std::function<Graph(int)> & make, const Check & check) -> bool
        {
            int passed = 0;
            for (int i = 0; i < cases; ++i) {
                auto g = make(i);
                if (auto why = check(g)) {
                    out_ << name << ": FAIL after " << passed << "/" << cases << " cases: " << *why << '\n';
                    auto small = shrink(g, check);
                    err_ << "c counterexample for " << name << ": " << check(small).value_or("?") << '\n';
                    to_dimacs(err_, small);
                    return false;
                }
                ++passed;
            }
            out_ << name << ": " << passed << "/" << cases << " passed\n";
            return true;
        }

        auto run() -> int
        {
            const int trials = options_.trials;

            auto mis_oracle = [this](const Graph & g) -> std::optional<std::string> {
                auto all = oracles::brute_force_all_mis(g, g.vertices());
                for (int k = 0; k <= g.size(); ++k) {
                    std::vector<VertexSet> expected;
                    for (auto s : all)
                        if (s.size() <= k)
                            expected.push_back(s);
                    if (mis_listing(g, k) != expected)
                        return "listing differs from brute force at k=" + std::to_string(k);
                }
                return std::nullopt;
            };

            auto mis_count_bound = [this](const Graph & g) -> std::optional<std::string> {
                for (int k = 0; k <= g.size(); ++k) {
                    auto count = mis_listing(g, k).size();
                    if (! mis_bound(g.size(), k).admits(count))
                        return std::to_string(count) + " sets exceed the bound at k=" + std::to_string(k);
                }
                return std::nullopt;
            };

            std::vector<std::pair<int, int>> shapes;
            for (int a = 0; a <= 4; ++a)
                for (int b = 0; a + b <= 4; ++b)
                    shapes.emplace_back(a, b);

            auto tightness = [this](const Graph & g) -> std::optional<std::string> {
                // graphs outside the triangle/K4 family are vacuous passes so shrinking stays inside it
                int k = 0;
                for (int v : g.vertices()) {
                    auto clique = g.closed_neighbourhood(v);
                    if (clique.size() != 3 && clique.size() != 4)
                        return std::nullopt;
                    for (int u : clique)
                        if (g.closed_neighbourhood(u) != clique)
                            return std::nullopt;
                    if (v == clique.lowest())
                        ++k;
                }
                auto count = mis_listing(g, k).size();
                auto bound = mis_bound(g.size(), k);
                if (bound.denominator != 1 || bound.numerator != count)
                    return std::to_string(count) + " sets, bound " + bound.to_string();
                return std::nullopt;
            };

            auto colouring = [this](const Graph & g) -> std::optional<std::string> {
                auto s = chromatic(g);
                int expected = oracles::brute_force_chromatic(g);
                if (s.chi != expected)
                    return "chi " + std::to_string(s.chi) + ", brute force " + std::to_string(expected);
                if (! is_proper_coloring(g, s.coloring) || s.coloring.num_colors != s.chi)
                    return std::string("extracted colouring is not a proper chi-colouring");
                return std::nullopt;
            };

            std::vector<Graph> small;
            for (int i = 0; i < trials; ++i)
                small.push_back(random_graph(10));
            auto from_small = [&](int i) { return small[i]; };

            bool ok = suite("mis-oracle", trials, from_small, mis_oracle)
                && suite("mis-bound", trials, from_small, mis_count_bound)
                && suite("tightness", std::min<int>(trials, static_cast<int>(shapes.size())),
                        [&](int i) { return gen_triangles_k4s(shapes[i].first, shapes[i].second); }, tightness)
                && suite("chromatic", trials, [this](int) { return random_graph(9); }, colouring);

            out_ << (ok ? "selftest: ok" : "selftest: FAILED") << '\n';
            return ok ? exit_ok : exit_property;
        }

    private:
        const SelftestOptions & options_;
        std::ostream & out_;
        std::ostream & err_;
        std::mt19937_64 rng_;
    };
}

auto parse_fault(std::string_view name) -> std::optional<Fault>
{
    if (name == "none")
        return Fault::none;
    if (name == "chromatic-off-by-one")
        return Fault::chromatic_off_by_one;
    if (name == "drop-first-mis")
        return Fault::drop_first_mis;
    return std::nullopt;
}

auto cmd_selftest(const SelftestOptions & options, std::ostream & out, std::ostream & err) -> int
{
    if (options.trials < 0) {
        err << "error: trials must be nonnegative\n";
        return exit_usage;
    }
    return Runner(options, out, err).run();
}

}
