#pragma once

#include <chromdp/chromatic.hpp>
#include <chromdp/graph.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace chromdp::cli {

enum ExitCode : int
{
    exit_ok = 0,
    exit_usage = 1,
    exit_parse = 2,
    exit_resource = 3,
    exit_property = 4
};

struct RunReport
{
    std::string instance;
    int n = 0;
    int m = 0;
    int chi = 0;
    double wall_ms = 0.0;
    EnumStats stats;
    std::size_t table_entries = 0;
    std::size_t table_bytes = 0;

    /// Single-line JSON object; see README for the schema.
    [[nodiscard]] auto to_json() const -> std::string;
};

struct SolveOptions
{
    std::string path;
    bool print_coloring = false;
    int max_n = default_dp_cap;
    bool json = false;
};

/// Prints `chi <value>` and optionally `v <vertex> <colour>` lines (1-based),
/// or a RunReport as JSON. The colouring is re-verified before printing.
auto cmd_solve(const SolveOptions & options, std::ostream & out, std::ostream & err) -> int;

struct MisOptions
{
    std::string path;
    int k = 0;
    bool raw = false;
    bool count_only = false;
    int max_n = default_vertex_cap;
};

/// Lists small maximal independent sets, one per line as sorted 1-based ids.
/// With raw, streams the enumerator output unfiltered (duplicates and
/// non-maximal sets included).
auto cmd_mis(const MisOptions & options, std::ostream & out, std::ostream & err) -> int;

/// Prints the exact bound 3^(4k-n) * 4^(n-3k) and a decimal rendering.
auto cmd_bound(std::uint64_t n, std::uint64_t k, std::ostream & out) -> int;

/// Builds a graph from a generator spec such as {"triangles-k4s", "1", "1"}.
/// Throws std::invalid_argument on a malformed spec.
auto generate(const std::vector<std::string> & spec) -> Graph;

/// Writes the generated graph as DIMACS to `out_path`, or stdout for "-".
auto cmd_gen(const std::vector<std::string> & spec, const std::string & out_path, std::ostream & out,
        std::ostream & err) -> int;

}
