#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>

namespace bsaf {

/// Dense index of an argument inside an ArgumentTable.
struct ArgId {
    std::uint32_t value = 0;

    friend constexpr auto operator<=>(ArgId, ArgId) = default;
};

/// Upper bound on arguments per table (user arguments plus dummies).
inline constexpr std::size_t kMaxArguments = 64;

/// Fixed-width set of argument indices. Iteration and comparison follow
/// ascending index order; `<` is lexicographic over the member sequence.
class ArgSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = ArgId;
        using difference_type = std::ptrdiff_t;
        using pointer = const ArgId*;
        using reference = ArgId;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

        constexpr ArgId operator*() const {
            return ArgId{static_cast<std::uint32_t>(std::countr_zero(rest_))};
        }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        friend constexpr bool operator==(iterator, iterator) = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr ArgSet() = default;
    constexpr ArgSet(std::initializer_list<ArgId> ids) {
        for (ArgId id : ids) insert(id);
    }

    static constexpr ArgSet from_bits(std::uint64_t bits) {
        ArgSet s;
        s.bits_ = bits;
        return s;
    }
    /// The set {0, ..., n-1}.
    static constexpr ArgSet first_n(std::size_t n) {
        return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

    constexpr bool contains(ArgId id) const { return (bits_ >> id.value) & 1U; }
    constexpr void insert(ArgId id) { bits_ |= std::uint64_t{1} << id.value; }
    constexpr void erase(ArgId id) { bits_ &= ~(std::uint64_t{1} << id.value); }

    constexpr bool subset_of(ArgSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(ArgSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr iterator begin() const { return iterator{bits_}; }
    constexpr iterator end() const { return iterator{0}; }

    constexpr ArgSet& operator|=(ArgSet o) { bits_ |= o.bits_; return *this; }
    constexpr ArgSet& operator&=(ArgSet o) { bits_ &= o.bits_; return *this; }
    constexpr ArgSet& operator-=(ArgSet o) { bits_ &= ~o.bits_; return *this; }

    friend constexpr ArgSet operator|(ArgSet a, ArgSet b) { return a |= b; }
    friend constexpr ArgSet operator&(ArgSet a, ArgSet b) { return a &= b; }
    friend constexpr ArgSet operator-(ArgSet a, ArgSet b) { return a -= b; }

    friend constexpr bool operator==(ArgSet, ArgSet) = default;

    friend constexpr std::strong_ordering operator<=>(ArgSet a, ArgSet b) {
        // Walk both member sequences; the first differing position decides,
        // and a proper prefix sorts first.
        std::uint64_t x = a.bits_;
        std::uint64_t y = b.bits_;
        while (x != 0 && y != 0) {
            int i = std::countr_zero(x);
            int j = std::countr_zero(y);
            if (i != j) return i <=> j;
            x &= x - 1;
            y &= y - 1;
        }
        if (x == 0 && y == 0) return std::strong_ordering::equal;
        return x == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }

private:
    std::uint64_t bits_ = 0;
};

/// Calls `fn(subset)` for every subset of `universe` in ascending bit-pattern order.
template <class Fn>
void for_each_subset(ArgSet universe, Fn&& fn) {
    const std::uint64_t mask = universe.bits();
    std::uint64_t s = 0;
    while (true) {
        fn(ArgSet::from_bits(s));
        if (s == mask) break;
        s = (s - mask) & mask;
    }
}

}  // namespace bsaf
