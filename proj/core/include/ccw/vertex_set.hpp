#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace ccw {

// Subset of the vertices of a host graph. Hosts never exceed 64 vertices,
// so one word per set keeps every set operation branch-free.
class vertex_set {
public:
    constexpr vertex_set() = default;
    constexpr explicit vertex_set(std::uint64_t bits) : bits_(bits) {}

    static constexpr vertex_set single(int v) { return vertex_set(std::uint64_t{1} << v); }

    // {0, 1, ..., n-1}
    static constexpr vertex_set first_n(int n) {
        return vertex_set(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    static vertex_set of(const std::vector<int>& vs) {
        vertex_set s;
        for (int v : vs) s.add(v);
        return s;
    }

    constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
    constexpr void add(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void remove(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr std::uint64_t bits() const { return bits_; }

    // lowest member, -1 when empty
    constexpr int min() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

    constexpr bool intersects(vertex_set o) const { return (bits_ & o.bits_) != 0; }
    constexpr bool subset_of(vertex_set o) const { return (bits_ & ~o.bits_) == 0; }

    constexpr vertex_set operator|(vertex_set o) const { return vertex_set(bits_ | o.bits_); }
    constexpr vertex_set operator&(vertex_set o) const { return vertex_set(bits_ & o.bits_); }
    constexpr vertex_set minus(vertex_set o) const { return vertex_set(bits_ & ~o.bits_); }
    constexpr vertex_set& operator|=(vertex_set o) { bits_ |= o.bits_; return *this; }
    constexpr vertex_set& operator&=(vertex_set o) { bits_ &= o.bits_; return *this; }

    friend constexpr bool operator==(vertex_set, vertex_set) = default;

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b; b &= b - 1) f(std::countr_zero(b));
    }

private:
    std::uint64_t bits_ = 0;
};

}  // namespace ccw
