#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace finitop {

/// A subset of a finite ground set {0, ..., n-1}, one bit per point.
///
/// The mask does not know its own width; the owning space does. Every
/// mask handed out by a FinSpace keeps the bits above n-1 clear.
class SubsetMask {
public:
    using word_type = std::uint32_t;

    constexpr SubsetMask() noexcept = default;
    constexpr explicit SubsetMask(word_type bits) noexcept : bits_(bits) {}

    static constexpr SubsetMask singleton(unsigned point) noexcept { return SubsetMask(word_type{1} << point); }
    static constexpr SubsetMask full(unsigned n) noexcept
    {
        return SubsetMask(n >= 32 ? ~word_type{0} : ((word_type{1} << n) - 1));
    }

    constexpr word_type bits() const noexcept { return bits_; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr int count() const noexcept { return std::popcount(bits_); }
    constexpr bool contains(unsigned point) const noexcept { return (bits_ >> point) & 1u; }
    constexpr bool subset_of(SubsetMask other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    constexpr bool meets(SubsetMask other) const noexcept { return (bits_ & other.bits_) != 0; }

    /// Complement relative to a ground set of `n` points.
    constexpr SubsetMask complement(unsigned n) const noexcept { return SubsetMask(~bits_ & full(n).bits_); }

    constexpr SubsetMask with(unsigned point) const noexcept { return SubsetMask(bits_ | (word_type{1} << point)); }
    constexpr SubsetMask without(unsigned point) const noexcept { return SubsetMask(bits_ & ~(word_type{1} << point)); }

    constexpr SubsetMask operator|(SubsetMask o) const noexcept { return SubsetMask(bits_ | o.bits_); }
    constexpr SubsetMask operator&(SubsetMask o) const noexcept { return SubsetMask(bits_ & o.bits_); }
    constexpr SubsetMask operator-(SubsetMask o) const noexcept { return SubsetMask(bits_ & ~o.bits_); }
    constexpr SubsetMask& operator|=(SubsetMask o) noexcept { bits_ |= o.bits_; return *this; }
    constexpr SubsetMask& operator&=(SubsetMask o) noexcept { bits_ &= o.bits_; return *this; }

    constexpr bool operator==(const SubsetMask&) const noexcept = default;

    /// First point, or -1 when empty.
    constexpr int first() const noexcept { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

    std::vector<unsigned> points() const
    {
        std::vector<unsigned> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (word_type b = bits_; b != 0; b &= b - 1)
            out.push_back(static_cast<unsigned>(std::countr_zero(b)));
        return out;
    }

    /// Calls fn(point) for each member in ascending order.
    template <typename Fn>
    constexpr void for_each(Fn&& fn) const
    {
        for (word_type b = bits_; b != 0; b &= b - 1)
            fn(static_cast<unsigned>(std::countr_zero(b)));
    }

private:
    word_type bits_ = 0;
};

/// Canonical family order: popcount first, then numeric value.
struct CanonicalOrder {
    constexpr bool operator()(SubsetMask a, SubsetMask b) const noexcept
    {
        if (a.count() != b.count())
            return a.count() < b.count();
        return a.bits() < b.bits();
    }
};

/// Iterates every subset of `n` points in numeric order.
template <typename Fn>
void for_each_subset(unsigned n, Fn&& fn)
{
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t b = 0; b < limit; ++b)
        fn(SubsetMask(static_cast<SubsetMask::word_type>(b)));
}

/// Iterates every subset of `m` (including empty and m itself).
template <typename Fn>
void for_each_submask(SubsetMask m, Fn&& fn)
{
    const auto full = m.bits();
    auto s = full;
    while (true) {
        fn(SubsetMask(s));
        if (s == 0)
            break;
        s = (s - 1) & full;
    }
}

}  // namespace finitop
