#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace chromdp {

using BigInt = boost::multiprecision::cpp_int;

/// Exact value of 3^(4k-n) * 4^(n-3k) as a reduced fraction. Either exponent
/// may be negative (not both, since they sum to k), so the value can drop
/// below one when k < n/4.
struct BoundValue
{
    BigInt numerator{1};
    BigInt denominator{1};

    /// Nearest double; +inf when the value overflows.
    [[nodiscard]] auto approx() const -> double;

    /// "num" when the denominator is one, else "num/den".
    [[nodiscard]] auto to_string() const -> std::string;

    /// Exact test count <= value.
    [[nodiscard]] auto admits(const BigInt & count) const -> bool { return count * denominator <= numerator; }
};

/// Upper bound on the number of maximal independent sets of size at most k
/// in any n-vertex graph. Tight for n/4 <= k <= n/3.
auto mis_bound(std::uint64_t n, std::uint64_t k) -> BoundValue;

}
