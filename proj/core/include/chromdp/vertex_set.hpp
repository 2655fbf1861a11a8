#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>

namespace chromdp {

/// A set of vertices v_0..v_63 stored as a bitmask. Bit i is set iff v_i is a
/// member, so the integer value of a set is the sum of 2^i over its members.
/// A proper subset always has a strictly smaller value than its superset,
/// which is the ordering the subset dynamic program iterates in.
class VertexSet
{
public:
    using word_type = std::uint64_t;
    static constexpr int max_vertices = 64;

    constexpr VertexSet() noexcept = default;
    constexpr explicit VertexSet(word_type bits) noexcept : bits_(bits) {}

    /// {v_0, ..., v_{n-1}}
    static constexpr auto first_n(int n) noexcept -> VertexSet
    {
        return VertexSet{n >= max_vertices ? ~word_type{0} : (word_type{1} << n) - 1};
    }

    static constexpr auto singleton(int v) noexcept -> VertexSet { return VertexSet{word_type{1} << v}; }

    [[nodiscard]] constexpr auto bits() const noexcept -> word_type { return bits_; }
    [[nodiscard]] constexpr auto empty() const noexcept -> bool { return bits_ == 0; }
    [[nodiscard]] constexpr auto size() const noexcept -> int { return std::popcount(bits_); }
    [[nodiscard]] constexpr auto contains(int v) const noexcept -> bool { return (bits_ >> v) & 1U; }

    /// Index of the lowest member; the set must be nonempty.
    [[nodiscard]] constexpr auto lowest() const noexcept -> int { return std::countr_zero(bits_); }

    [[nodiscard]] constexpr auto with(int v) const noexcept -> VertexSet { return VertexSet{bits_ | (word_type{1} << v)}; }
    [[nodiscard]] constexpr auto without(int v) const noexcept -> VertexSet { return VertexSet{bits_ & ~(word_type{1} << v)}; }

    [[nodiscard]] constexpr auto is_subset_of(VertexSet other) const noexcept -> bool { return (bits_ & ~other.bits_) == 0; }
    [[nodiscard]] constexpr auto is_proper_subset_of(VertexSet other) const noexcept -> bool
    {
        return is_subset_of(other) && bits_ != other.bits_;
    }
    [[nodiscard]] constexpr auto intersects(VertexSet other) const noexcept -> bool { return (bits_ & other.bits_) != 0; }

    friend constexpr auto operator|(VertexSet a, VertexSet b) noexcept -> VertexSet { return VertexSet{a.bits_ | b.bits_}; }
    friend constexpr auto operator&(VertexSet a, VertexSet b) noexcept -> VertexSet { return VertexSet{a.bits_ & b.bits_}; }
    /// Set difference.
    friend constexpr auto operator-(VertexSet a, VertexSet b) noexcept -> VertexSet { return VertexSet{a.bits_ & ~b.bits_}; }

    constexpr auto operator|=(VertexSet o) noexcept -> VertexSet & { bits_ |= o.bits_; return *this; }
    constexpr auto operator&=(VertexSet o) noexcept -> VertexSet & { bits_ &= o.bits_; return *this; }
    constexpr auto operator-=(VertexSet o) noexcept -> VertexSet & { bits_ &= ~o.bits_; return *this; }

    friend constexpr auto operator==(VertexSet, VertexSet) noexcept -> bool = default;
    friend constexpr auto operator<=>(VertexSet, VertexSet) noexcept = default;

    class iterator
    {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;

        constexpr iterator() noexcept = default;
        constexpr explicit iterator(word_type rest) noexcept : rest_(rest) {}
        constexpr auto operator*() const noexcept -> int { return std::countr_zero(rest_); }
        constexpr auto operator++() noexcept -> iterator & { rest_ &= rest_ - 1; return *this; }
        constexpr auto operator++(int) noexcept -> iterator { auto t = *this; ++*this; return t; }
        friend constexpr auto operator==(iterator, iterator) noexcept -> bool = default;

    private:
        word_type rest_ = 0;
    };

    /// Members in increasing index order.
    [[nodiscard]] constexpr auto begin() const noexcept -> iterator { return iterator{bits_}; }
    [[nodiscard]] constexpr auto end() const noexcept -> iterator { return iterator{}; }

private:
    word_type bits_ = 0;
};

}

template <>
struct std::hash<chromdp::VertexSet>
{
    auto operator()(chromdp::VertexSet s) const noexcept -> std::size_t { return std::hash<std::uint64_t>{}(s.bits()); }
};
