#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>

namespace chromdp::cli {

/// Deliberate defects for checking that the self-test actually catches
/// failures. Never used outside test harnesses.
enum class Fault
{
    none,
    chromatic_off_by_one,  ///< report chi + 1
    drop_first_mis         ///< lose the lowest-valued maximal set from every listing
};

auto parse_fault(std::string_view name) -> std::optional<Fault>;

struct SelftestOptions
{
    std::uint64_t seed = 1;
    int trials = 40;
    Fault fault = Fault::none;
};

/// Runs the oracle-equivalence, counting-bound, tightness and colouring
/// suites on `trials` generated cases each. Prints one summary line per
/// suite. On the first failure, shrinks the failing graph and prints it as
/// DIMACS on `err`, returning exit code 4.
auto cmd_selftest(const SelftestOptions & options, std::ostream & out, std::ostream & err) -> int;

}
