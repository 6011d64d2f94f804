#pragma once

// Subsets of a ground set of at most 16 points, packed into machine words.
// Point i corresponds to bit i. All set algebra is word arithmetic; the
// ground-set size rides along so complements are well defined.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fintop {

inline constexpr int kMaxGroundSize = 16;

/// All-ones mask for a ground set of n points.
constexpr std::uint32_t full_bits(int n) {
    return n <= 0 ? 0u : ((1u << n) - 1u);
}

/// a is a subset of b, as raw bit masks.
constexpr bool bits_subset(std::uint32_t a, std::uint32_t b) {
    return (a & ~b) == 0u;
}

/// Re-index the points of `sub` densely within `within`. Bit k of the result
/// is set iff the k-th lowest point of `within` lies in `sub`. `sub` must be
/// a subset of `within`.
constexpr std::uint32_t compress_bits(std::uint32_t sub, std::uint32_t within) {
    std::uint32_t out = 0;
    int k = 0;
    for (std::uint32_t w = within; w != 0; w &= w - 1, ++k) {
        std::uint32_t lowest = w & (0u - w);
        if (sub & lowest) out |= (1u << k);
    }
    return out;
}

/// Inverse of compress_bits: spread the dense mask back onto the points of
/// `within`.
constexpr std::uint32_t expand_bits(std::uint32_t dense, std::uint32_t within) {
    std::uint32_t out = 0;
    int k = 0;
    for (std::uint32_t w = within; w != 0; w &= w - 1, ++k) {
        if (dense & (1u << k)) out |= w & (0u - w);
    }
    return out;
}

/// Visit every superset of `a` within the ground mask `full`, in ascending
/// numeric order (which is also lexicographic order on point sets read from
/// bit 0 upward). Stops early when fn returns false.
template <class Fn>
void for_each_superset(std::uint32_t a, std::uint32_t full, Fn&& fn) {
    std::uint32_t u = a;
    for (;;) {
        if (!fn(u)) return;
        if (u == full) return;
        u = (u + 1u) | a;
    }
}

/// One subset of a fixed finite ground set. Immutable value type.
class SubsetMask {
public:
    constexpr SubsetMask() = default;

    SubsetMask(std::uint32_t bits, int n) : bits_(static_cast<std::uint16_t>(bits)), n_(static_cast<std::uint8_t>(n)) {
        if (n < 0 || n > kMaxGroundSize)
            throw std::invalid_argument("ground set size out of range: " + std::to_string(n));
        if (!bits_subset(bits, full_bits(n)))
            throw std::invalid_argument("subset has bits outside its ground set");
    }

    static SubsetMask empty_set(int n) { return SubsetMask(0u, n); }
    static SubsetMask full_set(int n) { return SubsetMask(full_bits(n), n); }
    static SubsetMask single(int point, int n) {
        if (point < 0 || point >= n) throw std::invalid_argument("point index out of range");
        return SubsetMask(1u << point, n);
    }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr int ground_size() const { return n_; }

    constexpr bool contains(int point) const { return (bits_ >> point) & 1u; }
    constexpr int size() const { return std::popcount(static_cast<std::uint32_t>(bits_)); }
    constexpr bool is_empty() const { return bits_ == 0; }
    constexpr bool is_full() const { return bits_ == full_bits(n_); }

    SubsetMask complement() const { return SubsetMask(~static_cast<std::uint32_t>(bits_) & full_bits(n_), n_); }

    bool subset_of(const SubsetMask& other) const {
        require_same_ground(other);
        return bits_subset(bits_, other.bits_);
    }

    std::vector<int> points() const {
        std::vector<int> out;
        for (int i = 0; i < n_; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    friend SubsetMask operator|(const SubsetMask& a, const SubsetMask& b) {
        a.require_same_ground(b);
        return SubsetMask(static_cast<std::uint32_t>(a.bits_ | b.bits_), a.n_);
    }
    friend SubsetMask operator&(const SubsetMask& a, const SubsetMask& b) {
        a.require_same_ground(b);
        return SubsetMask(static_cast<std::uint32_t>(a.bits_ & b.bits_), a.n_);
    }
    friend SubsetMask operator-(const SubsetMask& a, const SubsetMask& b) {
        a.require_same_ground(b);
        return SubsetMask(static_cast<std::uint32_t>(a.bits_ & ~b.bits_), a.n_);
    }

    friend bool operator==(const SubsetMask& a, const SubsetMask& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const SubsetMask& a, const SubsetMask& b) { return !(a == b); }
    friend bool operator<(const SubsetMask& a, const SubsetMask& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.bits_ < b.bits_;
    }

private:
    void require_same_ground(const SubsetMask& other) const {
        if (n_ != other.n_)
            throw std::invalid_argument("subsets live on different ground sets");
    }

    std::uint16_t bits_ = 0;
    std::uint8_t n_ = 0;
};

}  // namespace fintop
