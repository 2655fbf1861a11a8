#include "commands.hpp"
#include "selftest.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char ** argv)
{
    using namespace chromdp::cli;

    CLI::App app{"Exact chromatic number and small maximal independent set enumeration"};
    app.require_subcommand(1);

    SolveOptions solve_opts;
    auto * solve = app.add_subcommand("solve", "Compute the chromatic number and an optimal colouring");
    solve->add_option("path", solve_opts.path, "DIMACS .col file")->required();
    solve->add_flag("--print-coloring", solve_opts.print_coloring, "Print `v <vertex> <colour>` lines");
    solve->add_option("--max-n", solve_opts.max_n, "Vertex cap for the 2^n-byte subset table (at most 28)")
        ->capture_default_str();
    solve->add_flag("--json", solve_opts.json, "Print a JSON run report");

    MisOptions mis_opts;
    bool maximal = false;
    auto * mis = app.add_subcommand("mis", "List maximal independent sets with at most k vertices");
    mis->add_option("path", mis_opts.path, "DIMACS .col file")->required();
    mis->add_option("k", mis_opts.k, "Size budget")->required();
    auto * raw_flag = mis->add_flag("--raw", mis_opts.raw, "Stream unfiltered enumerator output");
    mis->add_flag("--maximal", maximal, "Only maximal sets, deduplicated (default)")->excludes(raw_flag);
    mis->add_flag("--count-only", mis_opts.count_only, "Print only the number of sets");
    mis->add_option("--max-n", mis_opts.max_n, "Vertex cap (at most 64)")->capture_default_str();

    std::uint64_t bound_n = 0, bound_k = 0;
    auto * bound = app.add_subcommand("bound", "Print 3^(4k-n) * 4^(n-3k) exactly");
    bound->add_option("n", bound_n)->required();
    bound->add_option("k", bound_k)->required();

    SelftestOptions selftest_opts;
    std::string fault = "none";
    auto * selftest = app.add_subcommand("selftest", "Run randomized oracle-equivalence suites");
    selftest->add_option("--seed", selftest_opts.seed)->capture_default_str();
    selftest->add_option("--trials", selftest_opts.trials)->capture_default_str();
    selftest->add_option("--inject-fault", fault)->group("");

    std::vector<std::string> gen_spec;
    std::string gen_out = "-";
    auto * gen = app.add_subcommand("gen", "Write a generated graph as DIMACS");
    gen->add_option("spec", gen_spec,
            "triangles-k4s A B | gnp N P SEED | petersen | groetzsch | complete N | cycle N")->required();
    gen->add_option("-o,--output", gen_out, "Output path, - for stdout")->capture_default_str();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    if (*solve)
        return cmd_solve(solve_opts, std::cout, std::cerr);
    if (*mis)
        return cmd_mis(mis_opts, std::cout, std::cerr);
    if (*bound)
        return cmd_bound(bound_n, bound_k, std::cout);
    if (*selftest) {
        auto parsed = parse_fault(fault);
        if (! parsed) {
            std::cerr << "error: unknown fault '" << fault << "'\n";
            return exit_usage;
        }
        selftest_opts.fault = *parsed;
        return cmd_selftest(selftest_opts, std::cout, std::cerr);
    }
    return cmd_gen(gen_spec, gen_out, std::cout, std::cerr);
}
