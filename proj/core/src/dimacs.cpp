#include <chromdp/dimacs.hpp>
#include <chromdp/errors.hpp>

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace chromdp {

namespace
{
    auto fail(int line_no, const std::string & what) -> parse_error
    {
        return parse_error("line " + std::to_string(line_no) + ": " + what);
    }

    auto read_count(std::istringstream & fields, int line_no, const char * what) -> long long
    {
        long long value = 0;
        if (! (fields >> value))
            throw fail(line_no, std::string("expected integer ") + what);
        return value;
    }

    auto expect_end(std::istringstream & fields, int line_no) -> void
    {
        std::string extra;
        if (fields >> extra)
            throw fail(line_no, "unexpected trailing token '" + extra + "'");
    }
}

auto from_dimacs(std::istream & in, int cap) -> Graph
{
    std::optional<long long> n;
    std::vector<Edge> edges;
    std::string line;
    int line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string tag;
        if (! (fields >> tag) || tag == "c")
            continue;

        if (tag == "p") {
            if (n)
                throw fail(line_no, "duplicate problem line");
            std::string format;
            fields >> format;
            if (format != "edge")
                throw fail(line_no, "expected 'p edge', got format '" + format + "'");
            auto vertices = read_count(fields, line_no, "vertex count");
            auto declared_edges = read_count(fields, line_no, "edge count");
            expect_end(fields, line_no);
            if (vertices < 0 || declared_edges < 0)
                throw fail(line_no, "negative count in problem line");
            if (vertices > cap)
                throw capacity_error("graph has " + std::to_string(vertices) + " vertices, cap is " + std::to_string(cap));
            n = vertices;
        }
        else if (tag == "e") {
            if (! n)
                throw fail(line_no, "edge before problem line");
            auto u = read_count(fields, line_no, "endpoint");
            auto v = read_count(fields, line_no, "endpoint");
            expect_end(fields, line_no);
            if (u < 1 || u > *n || v < 1 || v > *n)
                throw fail(line_no, "endpoint out of range 1.." + std::to_string(*n));
            if (u == v)
                throw fail(line_no, "self-loop on vertex " + std::to_string(u));
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        }
        else
            throw fail(line_no, "unknown line type '" + tag + "'");
    }

    if (! n)
        throw parse_error("missing problem line 'p edge <n> <m>'");
    return Graph::from_edges(static_cast<int>(*n), edges, cap);
}

auto from_dimacs_string(const std::string & text, int cap) -> Graph
{
    std::istringstream in(text);
    return from_dimacs(in, cap);
}

auto read_dimacs_file(const std::string & path, int cap) -> Graph
{
    std::ifstream in(path);
    if (! in)
        throw parse_error("cannot open '" + path + "'");
    return from_dimacs(in, cap);
}

auto to_dimacs(std::ostream & out, const Graph & g) -> void
{
    out << "p edge " << g.size() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

auto to_dimacs_string(const Graph & g) -> std::string
{
    std::ostringstream out;
    to_dimacs(out, g);
    return out.str();
}

}
