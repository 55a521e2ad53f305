#pragma once

#include <bit>
#include <cstdint>

namespace jramsey {

// 128-bit vertex set / adjacency row. Vertex i lives in word i/64, bit i%64.
struct Bits128 {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    static constexpr Bits128 bit(int i) {
        return i < 64 ? Bits128{std::uint64_t{1} << i, 0}
                      : Bits128{0, std::uint64_t{1} << (i - 64)};
    }
    // Bits 0..n-1 set.
    static constexpr Bits128 low(int n) {
        if (n <= 0) return {};
        if (n >= 128) return {~std::uint64_t{0}, ~std::uint64_t{0}};
        if (n >= 64) return {~std::uint64_t{0}, (std::uint64_t{1} << (n - 64)) - 1};
        return {(std::uint64_t{1} << n) - 1, 0};
    }

    constexpr bool test(int i) const {
        return i < 64 ? (lo >> i) & 1 : (hi >> (i - 64)) & 1;
    }
    constexpr void set(int i) {
        if (i < 64) lo |= std::uint64_t{1} << i;
        else hi |= std::uint64_t{1} << (i - 64);
    }
    constexpr void reset(int i) {
        if (i < 64) lo &= ~(std::uint64_t{1} << i);
        else hi &= ~(std::uint64_t{1} << (i - 64));
    }
    constexpr int count() const { return std::popcount(lo) + std::popcount(hi); }
    constexpr bool any() const { return lo != 0 || hi != 0; }
    constexpr bool none() const { return !any(); }

    // Smallest set bit, or -1.
    constexpr int first() const {
        if (lo) return std::countr_zero(lo);
        if (hi) return 64 + std::countr_zero(hi);
        return -1;
    }
    // Smallest set bit > i, or -1.
    constexpr int next(int i) const {
        Bits128 rest = *this & ~low(i + 1);
        return rest.first();
    }

    friend constexpr Bits128 operator&(Bits128 a, Bits128 b) { return {a.lo & b.lo, a.hi & b.hi}; }
    friend constexpr Bits128 operator|(Bits128 a, Bits128 b) { return {a.lo | b.lo, a.hi | b.hi}; }
    friend constexpr Bits128 operator^(Bits128 a, Bits128 b) { return {a.lo ^ b.lo, a.hi ^ b.hi}; }
    friend constexpr Bits128 operator~(Bits128 a) { return {~a.lo, ~a.hi}; }
    friend constexpr bool operator==(Bits128 a, Bits128 b) = default;
};

// Iterate set bits in ascending order.
template <typename F>
inline void for_each_bit(Bits128 s, F&& f) {
    for (int v = s.first(); v >= 0; v = s.next(v)) f(v);
}

}  // namespace jramsey
