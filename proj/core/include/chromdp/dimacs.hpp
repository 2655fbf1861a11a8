#pragma once

#include <chromdp/graph.hpp>

#include <iosfwd>
#include <string>

namespace chromdp {

/// Reads a DIMACS .col graph: `c` comment lines, exactly one `p edge <n> <m>`
/// line, then `e <u> <v>` lines with 1-based endpoints. Duplicate edges are
/// merged; the declared m is informational only. Throws parse_error on
/// malformed input or a self-loop, capacity_error when n exceeds `cap`.
auto from_dimacs(std::istream & in, int cap = default_vertex_cap) -> Graph;
auto from_dimacs_string(const std::string & text, int cap = default_vertex_cap) -> Graph;
auto read_dimacs_file(const std::string & path, int cap = default_vertex_cap) -> Graph;

/// Writes `p edge n m` followed by one `e u v` line per edge, u < v, sorted
/// by (u, v), 1-based.
auto to_dimacs(std::ostream & out, const Graph & g) -> void;
auto to_dimacs_string(const Graph & g) -> std::string;

}
