#include <chromdp/mis_bound.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace chromdp {

namespace
{
    auto power(unsigned base, std::uint64_t exponent) -> BigInt
    {
        BigInt result = 1, b = base;
        while (exponent) {
            if (exponent & 1U)
                result *= b;
            exponent >>= 1;
            if (exponent)
                b *= b;
        }
        return result;
    }
}

auto BoundValue::approx() const -> double
{
    // wide exponent range so huge numerators and denominators do not both overflow
    using boost::multiprecision::cpp_bin_float_50;
    return static_cast<double>(cpp_bin_float_50(numerator) / cpp_bin_float_50(denominator));
}

auto BoundValue::to_string() const -> std::string
{
    if (denominator == 1)
        return numerator.str();
    return numerator.str() + "/" + denominator.str();
}

auto mis_bound(std::uint64_t n, std::uint64_t k) -> BoundValue
{
    BigInt three_exp = 4 * BigInt(k) - BigInt(n);
    BigInt four_exp = BigInt(n) - 3 * BigInt(k);
    BoundValue b;
    if (three_exp >= 0)
        b.numerator *= power(3, three_exp.convert_to<std::uint64_t>());
    else
        b.denominator *= power(3, BigInt(-three_exp).convert_to<std::uint64_t>());
    if (four_exp >= 0)
        b.numerator *= power(4, four_exp.convert_to<std::uint64_t>());
    else
        b.denominator *= power(4, BigInt(-four_exp).convert_to<std::uint64_t>());
    return b;
}

}
