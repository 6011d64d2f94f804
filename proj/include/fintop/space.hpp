#pragma once

// Finite topological spaces as explicit families of open sets.
//
// A space is a ground set {0..n-1} (n <= 16) plus the sorted list of its
// open sets and an O(1) membership table. Construction goes through
// validate_topology, which checks the axioms and reports the first violating
// pair of sets instead of just failing.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fintop/errors.hpp"
#include "fintop/mask.hpp"
#include "fintop/names.hpp"

namespace fintop {

/// Why a family of subsets is not a topology. `first`/`second` carry the
/// witness pair for the closure violations.
struct TopologyError {
    enum class Code {
        ground_set_too_large,
        missing_empty_or_full,
        not_closed_under_union,
        not_closed_under_intersection,
    };

    Code code;
    int n = 0;
    SubsetMask first;
    SubsetMask second;

    std::string message() const {
        switch (code) {
            case Code::ground_set_too_large:
                return "ground set size " + std::to_string(n) + " is outside 1.." +
                       std::to_string(kMaxGroundSize);
            case Code::missing_empty_or_full:
                return "family must contain the empty set and the whole ground set";
            case Code::not_closed_under_union:
                return "family is not closed under union: " + format_subset(first) +
                       " \xE2\x88\xAA " + format_subset(second) + " is missing";
            case Code::not_closed_under_intersection:
                return "family is not closed under intersection: " + format_subset(first) +
                       " \xE2\x88\xA9 " + format_subset(second) + " is missing";
        }
        return "invalid topology";
    }
};

class FiniteSpace;
using TopologyResult = std::variant<FiniteSpace, TopologyError>;

/// Check the topology axioms on an arbitrary family of raw masks.
/// Returns the first failure in deterministic order, or nothing.
/// `bits` need not be sorted or unique.
inline std::optional<TopologyError> family_topology_failure(int n, std::span<const std::uint16_t> bits) {
    if (n < 1 || n > kMaxGroundSize)
        return TopologyError{TopologyError::Code::ground_set_too_large, n, {}, {}};
    const std::uint32_t full = full_bits(n);

    std::vector<std::uint16_t> members(bits.begin(), bits.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    std::vector<std::uint8_t> present(std::size_t{1} << n, 0);
    for (std::uint16_t m : members) present[m] = 1;
    if (!present[0] || !present[full])
        return TopologyError{TopologyError::Code::missing_empty_or_full, n,
                             SubsetMask::empty_set(n), SubsetMask::full_set(n)};

    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const std::uint32_t a = members[i], b = members[j];
            if (!present[a | b])
                return TopologyError{TopologyError::Code::not_closed_under_union, n,
                                     SubsetMask(a, n), SubsetMask(b, n)};
            if (!present[a & b])
                return TopologyError{TopologyError::Code::not_closed_under_intersection, n,
                                     SubsetMask(a, n), SubsetMask(b, n)};
        }
    }
    return std::nullopt;
}

/// A validated finite topological space. Immutable after construction.
class FiniteSpace {
public:
    int ground_size() const { return n_; }
    std::uint32_t full() const { return full_bits(n_); }
    std::size_t subset_count() const { return std::size_t{1} << n_; }

    /// Open sets as raw masks, ascending.
    const std::vector<std::uint16_t>& opens() const { return open_bits_; }

    std::vector<SubsetMask> opens_as_masks() const {
        std::vector<SubsetMask> out;
        out.reserve(open_bits_.size());
        for (std::uint16_t m : open_bits_) out.emplace_back(m, n_);
        return out;
    }

    bool is_open_bits(std::uint32_t mask) const { return is_open_[mask] != 0; }
    bool is_open(SubsetMask mask) const { return is_open_[mask.bits()] != 0; }
    bool is_closed_bits(std::uint32_t mask) const { return is_open_[~mask & full()] != 0; }
    bool is_closed(SubsetMask mask) const { return is_closed_bits(mask.bits()); }

    friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
        return a.n_ == b.n_ && a.open_bits_ == b.open_bits_;
    }
    friend bool operator!=(const FiniteSpace& a, const FiniteSpace& b) { return !(a == b); }
    friend bool operator<(const FiniteSpace& a, const FiniteSpace& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.open_bits_ < b.open_bits_;
    }

    friend TopologyResult validate_topology(int n, std::span<const std::uint16_t> bits);

private:
    FiniteSpace(int n, std::vector<std::uint16_t> sorted_opens)
        : n_(n), open_bits_(std::move(sorted_opens)), is_open_(std::size_t{1} << n, 0) {
        for (std::uint16_t m : open_bits_) is_open_[m] = 1;
    }

    int n_ = 0;
    std::vector<std::uint16_t> open_bits_;
    std::vector<std::uint8_t> is_open_;
};

inline TopologyResult validate_topology(int n, std::span<const std::uint16_t> bits) {
    if (auto failure = family_topology_failure(n, bits)) return *failure;
    std::vector<std::uint16_t> members(bits.begin(), bits.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return FiniteSpace(n, std::move(members));
}

inline TopologyResult validate_topology(int n, std::span<const SubsetMask> family) {
    std::vector<std::uint16_t> bits;
    bits.reserve(family.size());
    for (const SubsetMask& m : family) {
        if (m.ground_size() != n)
            throw std::invalid_argument("family member has mismatched ground set");
        bits.push_back(static_cast<std::uint16_t>(m.bits()));
    }
    return validate_topology(n, std::span<const std::uint16_t>(bits));
}

/// Convenience for fixtures and hand-built spaces: throws on invalid input.
inline FiniteSpace make_topology(int n, std::vector<std::uint16_t> bits) {
    TopologyResult r = validate_topology(n, std::span<const std::uint16_t>(bits));
    if (auto* err = std::get_if<TopologyError>(&r)) throw ValidationError(err->message());
    return std::get<FiniteSpace>(std::move(r));
}

inline FiniteSpace discrete_space(int n) {
    std::vector<std::uint16_t> bits;
    bits.reserve(std::size_t{1} << n);
    for (std::uint32_t m = 0; m <= full_bits(n); ++m) bits.push_back(static_cast<std::uint16_t>(m));
    return make_topology(n, std::move(bits));
}

inline FiniteSpace indiscrete_space(int n) {
    return make_topology(n, {0, static_cast<std::uint16_t>(full_bits(n))});
}

/// Union of all open subsets of `a`.
inline std::uint32_t interior_bits(const FiniteSpace& s, std::uint32_t a) {
    std::uint32_t acc = 0;
    for (std::uint16_t u : s.opens()) {
        if (bits_subset(u, a)) acc |= u;
    }
    return acc;
}

/// Smallest closed superset of `a`, computed as the complement of the
/// interior of the complement.
inline std::uint32_t closure_bits(const FiniteSpace& s, std::uint32_t a) {
    return ~interior_bits(s, ~a & s.full()) & s.full();
}

inline SubsetMask interior(const FiniteSpace& s, SubsetMask a) {
    return SubsetMask(interior_bits(s, a.bits()), s.ground_size());
}

inline SubsetMask closure(const FiniteSpace& s, SubsetMask a) {
    return SubsetMask(closure_bits(s, a.bits()), s.ground_size());
}

/// A subspace together with the dense re-indexing of its points.
/// parent_point[i] is the index in the parent of the subspace's point i.
struct Subspace {
    FiniteSpace space;
    std::vector<std::uint8_t> parent_point;

    /// Re-index a subset of the parent (must lie inside the carrier) into
    /// subspace coordinates.
    std::uint32_t to_local(std::uint32_t parent_mask, std::uint32_t carrier) const {
        return compress_bits(parent_mask, carrier);
    }
};

/// Relative topology { G intersect H : G open }. H must be non-empty.
inline Subspace subspace(const FiniteSpace& s, SubsetMask h) {
    if (h.ground_size() != s.ground_size())
        throw std::invalid_argument("carrier lives on a different ground set");
    if (h.is_empty()) throw EmptySubspaceError();

    const std::uint32_t carrier = h.bits();
    const int sub_n = h.size();

    std::vector<std::uint16_t> bits;
    bits.reserve(s.opens().size());
    for (std::uint16_t g : s.opens())
        bits.push_back(static_cast<std::uint16_t>(compress_bits(g & carrier, carrier)));

    TopologyResult r = validate_topology(sub_n, std::span<const std::uint16_t>(bits));
    if (std::holds_alternative<TopologyError>(r))
        throw ValidationError("relative topology failed validation: " +
                              std::get<TopologyError>(r).message());

    std::vector<std::uint8_t> parent;
    parent.reserve(static_cast<std::size_t>(sub_n));
    for (int p : h.points()) parent.push_back(static_cast<std::uint8_t>(p));
    return Subspace{std::get<FiniteSpace>(std::move(r)), std::move(parent)};
}

}  // namespace fintop
