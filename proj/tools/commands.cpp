#include "commands.hpp"

#include <chromdp/dimacs.hpp>
#include <chromdp/errors.hpp>
#include <chromdp/generators.hpp>
#include <chromdp/mis_bound.hpp>
#include <chromdp/mis_enum.hpp>

#include <json.hpp>

#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace chromdp::cli {

namespace
{
    auto print_set(std::ostream & out, VertexSet s) -> void
    {
        bool first = true;
        for (int v : s) {
            out << (first ? "" : " ") << v + 1;
            first = false;
        }
        out << '\n';
    }

    template <typename T>
    auto parse_number(const std::string & text, const char * what) -> T
    {
        T value{};
        auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || end != text.data() + text.size())
            throw std::invalid_argument(std::string("bad ") + what + " '" + text + "'");
        return value;
    }

    auto parse_probability(const std::string & text) -> double
    {
        std::size_t used = 0;
        double p = 0;
        try {
            p = std::stod(text, &used);
        }
        catch (const std::exception &) {
            used = 0;
        }
        if (used != text.size() || text.empty())
            throw std::invalid_argument("bad probability '" + text + "'");
        return p;
    }
}

auto RunReport::to_json() const -> std::string
{
    nlohmann::ordered_json j;
    j["instance"] = instance;
    j["n"] = n;
    j["m"] = m;
    j["chi"] = chi;
    j["wall_ms"] = wall_ms;
    j["recursive_calls"] = stats.recursive_calls;
    j["emitted_sets"] = stats.emitted_sets;
    j["table_entries"] = table_entries;
    j["table_bytes"] = table_bytes;
    return j.dump();
}

auto cmd_solve(const SolveOptions & options, std::ostream & out, std::ostream & err) -> int
{
    if (options.max_n < 0 || options.max_n > max_dp_cap) {
        err << "error: --max-n must lie in 0.." << max_dp_cap << '\n';
        return exit_usage;
    }

    try {
        auto start = std::chrono::steady_clock::now();
        auto g = read_dimacs_file(options.path, VertexSet::max_vertices);
        auto solution = solve(g, DpOptions{.max_vertices = options.max_n, .on_visit = {}});
        auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);

        if (! is_proper_coloring(g, solution.coloring) || solution.coloring.num_colors != solution.chi) {
            err << "error: extracted colouring failed verification\n";
            return exit_property;
        }

        if (options.json) {
            RunReport report{options.path, g.size(), g.edge_count(), solution.chi, elapsed.count(), solution.stats,
                solution.table_entries, solution.table_bytes};
            out << report.to_json() << '\n';
        }
        else
            out << "chi " << solution.chi << '\n';

        if (options.print_coloring)
            for (int v = 0; v < g.size(); ++v)
                out << "v " << v + 1 << ' ' << solution.coloring.colors[v] + 1 << '\n';
        return exit_ok;
    }
    catch (const parse_error & e) {
        err << "parse error: " << e.what() << '\n';
        return exit_parse;
    }
    catch (const capacity_error & e) {
        err << "resource error: " << e.what() << '\n';
        return exit_resource;
    }
    catch (const std::bad_alloc &) {
        err << "resource error: out of memory allocating the subset table\n";
        return exit_resource;
    }
}

auto cmd_mis(const MisOptions & options, std::ostream & out, std::ostream & err) -> int
{
    if (options.k < 0) {
        err << "error: k must be nonnegative\n";
        return exit_usage;
    }
    if (options.max_n < 0 || options.max_n > VertexSet::max_vertices) {
        err << "error: --max-n must lie in 0.." << VertexSet::max_vertices << '\n';
        return exit_usage;
    }

    try {
        auto g = read_dimacs_file(options.path, options.max_n);
        if (options.raw) {
            std::uint64_t count = 0;
            small_mis(g, g.vertices(), options.k, [&](VertexSet i) {
                ++count;
                if (! options.count_only)
                    print_set(out, i);
            });
            if (options.count_only)
                out << count << '\n';
        }
        else {
            auto sets = small_mis_filtered(g, g.vertices(), options.k);
            if (options.count_only)
                out << sets.size() << '\n';
            else
                for (auto s : sets)
                    print_set(out, s);
        }
        return exit_ok;
    }
    catch (const parse_error & e) {
        err << "parse error: " << e.what() << '\n';
        return exit_parse;
    }
    catch (const capacity_error & e) {
        err << "resource error: " << e.what() << '\n';
        return exit_resource;
    }
}

auto cmd_bound(std::uint64_t n, std::uint64_t k, std::ostream & out) -> int
{
    auto b = mis_bound(n, k);
    out << b.to_string() << '\n';
    std::ostringstream decimal;
    decimal << std::setprecision(std::numeric_limits<double>::max_digits10 - 2) << b.approx();
    out << decimal.str() << '\n';
    return exit_ok;
}

auto generate(const std::vector<std::string> & spec) -> Graph
{
    if (spec.empty())
        throw std::invalid_argument("empty generator spec");
    const auto & kind = spec.front();
    auto arity = [&](std::size_t args) {
        if (spec.size() != args + 1)
            throw std::invalid_argument("'" + kind + "' takes " + std::to_string(args) + " argument(s)");
    };
    const int cap = VertexSet::max_vertices;

    if (kind == "triangles-k4s") {
        arity(2);
        return gen_triangles_k4s(parse_number<int>(spec[1], "count"), parse_number<int>(spec[2], "count"), cap);
    }
    if (kind == "gnp") {
        arity(3);
        return gen_gnp(parse_number<int>(spec[1], "vertex count"), parse_probability(spec[2]),
                parse_number<std::uint64_t>(spec[3], "seed"), cap);
    }
    if (kind == "petersen" || kind == "groetzsch") {
        arity(0);
        return gen_named(kind);
    }
    if (kind == "complete") {
        arity(1);
        return gen_complete(parse_number<int>(spec[1], "vertex count"), cap);
    }
    if (kind == "cycle") {
        arity(1);
        return gen_cycle(parse_number<int>(spec[1], "vertex count"), cap);
    }
    throw std::invalid_argument("unknown generator '" + kind + "'");
}

auto cmd_gen(const std::vector<std::string> & spec, const std::string & out_path, std::ostream & out,
        std::ostream & err) -> int
{
    Graph g;
    try {
        g = generate(spec);
    }
    catch (const std::invalid_argument & e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const capacity_error & e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    if (out_path == "-") {
        to_dimacs(out, g);
        return exit_ok;
    }
    std::ofstream file(out_path);
    if (! file) {
        err << "error: cannot write '" << out_path << "'\n";
        return exit_usage;
    }
    to_dimacs(file, g);
    return exit_ok;
}

}
