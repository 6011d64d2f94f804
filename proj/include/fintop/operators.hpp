#pragma once

// Derived set families (alpha-open, semi-open, ...), generalized closure
// operators, and the tau-star construction.
//
// SpaceTables is the workhorse: one immutable bundle of per-subset tables
// for a space, built once and then shared read-only. Everything downstream
// (classifiers, claim sweeps, the CLI) runs on these tables.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fintop/mask.hpp"
#include "fintop/space.hpp"
#include "fintop/variant.hpp"

namespace fintop {

enum class FamilyKind {
    alpha_open,
    semi_open,
    pre_open,
    beta_open,
    alpha_m_closed,  ///< variant-dependent; the family key carries the variant
};

inline std::string to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::alpha_open: return "alpha-open";
        case FamilyKind::semi_open: return "semi-open";
        case FamilyKind::pre_open: return "pre-open";
        case FamilyKind::beta_open: return "beta-open";
        case FamilyKind::alpha_m_closed: return "alpha-m-closed";
    }
    return "?";
}

enum class ClosureKind {
    closure,       ///< cl
    alpha_closure, ///< acl, via complements of the alpha-open family
    semi_closure,  ///< scl
    pre_closure,   ///< pcl
    closure_star,  ///< cl*, bare intersection of alpha-m closed supersets
};

inline std::string to_string(ClosureKind k) {
    switch (k) {
        case ClosureKind::closure: return "cl";
        case ClosureKind::alpha_closure: return "acl";
        case ClosureKind::semi_closure: return "scl";
        case ClosureKind::pre_closure: return "pcl";
        case ClosureKind::closure_star: return "cl*";
    }
    return "?";
}

/// One derived family of subsets, with membership table and sorted member
/// list. `topology_failure` records the result of an explicit axiom check on
/// the family; it is never assumed.
struct DerivedFamily {
    FamilyKind kind;
    std::optional<AlphaMVariant> variant;  ///< set iff kind == alpha_m_closed
    int n = 0;
    std::vector<std::uint16_t> members;    ///< ascending
    std::vector<std::uint8_t> member_lookup;
    std::optional<TopologyError> topology_failure;

    bool contains(std::uint32_t mask) const { return member_lookup[mask] != 0; }
};

/// Precomputed per-subset tables for one space. Indexed by raw mask.
struct SpaceTables {
    FiniteSpace space;
    int n;
    std::uint32_t full;

    std::vector<std::uint16_t> interior_of;
    std::vector<std::uint16_t> closure_of;

    // Membership flags per derived class of set, one entry per subset.
    std::vector<std::uint8_t> alpha_open_of, semi_open_of, pre_open_of, beta_open_of;
    std::vector<std::uint8_t> alpha_closed_of, semi_closed_of, pre_closed_of, beta_closed_of;
    std::vector<std::uint8_t> alpha_m_closed_of[2];  // indexed by variant_index

    // Ascending member lists for the families that sweeps iterate.
    std::vector<std::uint16_t> closed_sets;
    std::vector<std::uint16_t> alpha_open_sets, semi_open_sets, semi_closed_sets;
    std::vector<std::uint16_t> alpha_m_closed_sets[2];

    // Kind-closure tables. alpha/semi/pre closures are computed from the
    // complements of the corresponding open family (the formula route is an
    // independent oracle in the tests). cl* is the bare intersection of
    // alpha-m closed supersets and is NOT assumed idempotent or closed.
    std::vector<std::uint16_t> alpha_closure_of, semi_closure_of, pre_closure_of;
    std::vector<std::uint16_t> closure_star_of[2];

    explicit SpaceTables(FiniteSpace s) : space(std::move(s)), n(space.ground_size()), full(space.full()) {
        const std::size_t count = space.subset_count();

        interior_of.resize(count);
        for (std::uint32_t a = 0; a <= full; ++a)
            interior_of[a] = static_cast<std::uint16_t>(interior_bits(space, a));
        closure_of.resize(count);
        for (std::uint32_t a = 0; a <= full; ++a)
            closure_of[a] = static_cast<std::uint16_t>(~interior_of[~a & full] & full);

        auto fill = [&](std::vector<std::uint8_t>& flags, auto pred) {
            flags.resize(count);
            for (std::uint32_t a = 0; a <= full; ++a) flags[a] = pred(a) ? 1 : 0;
        };
        // Both halves of each open/closed pair come straight from their own
        // definitions; the duality between them is a tested property, not an
        // implementation shortcut.
        fill(alpha_open_of, [&](std::uint32_t a) { return bits_subset(a, interior_of[closure_of[interior_of[a]]]); });
        fill(alpha_closed_of, [&](std::uint32_t a) { return bits_subset(closure_of[interior_of[closure_of[a]]], a); });
        fill(semi_open_of, [&](std::uint32_t a) { return bits_subset(a, closure_of[interior_of[a]]); });
        fill(semi_closed_of, [&](std::uint32_t a) { return bits_subset(interior_of[closure_of[a]], a); });
        fill(pre_open_of, [&](std::uint32_t a) { return bits_subset(a, interior_of[closure_of[a]]); });
        fill(pre_closed_of, [&](std::uint32_t a) { return bits_subset(closure_of[interior_of[a]], a); });
        fill(beta_open_of, [&](std::uint32_t a) { return bits_subset(a, closure_of[interior_of[closure_of[a]]]); });
        fill(beta_closed_of, [&](std::uint32_t a) { return bits_subset(interior_of[closure_of[interior_of[a]]], a); });

        for (AlphaMVariant v : kBothVariants) {
            auto& flags = alpha_m_closed_of[variant_index(v)];
            flags.resize(count);
            const std::vector<std::uint8_t>& witness =
                v == AlphaMVariant::alpha_open_witnesses ? alpha_open_of : space_open_flags();
            for (std::uint32_t a = 0; a <= full; ++a) {
                const std::uint32_t target = interior_of[closure_of[a]];
                bool ok = true;
                for_each_superset(a, full, [&](std::uint32_t u) {
                    if (witness[u] && !bits_subset(target, u)) {
                        ok = false;
                        return false;
                    }
                    return true;
                });
                flags[a] = ok ? 1 : 0;
            }
        }

        auto collect = [&](const std::vector<std::uint8_t>& flags) {
            std::vector<std::uint16_t> out;
            for (std::uint32_t a = 0; a <= full; ++a)
                if (flags[a]) out.push_back(static_cast<std::uint16_t>(a));
            return out;
        };
        closed_sets.reserve(space.opens().size());
        for (std::uint32_t a = 0; a <= full; ++a)
            if (space.is_closed_bits(a)) closed_sets.push_back(static_cast<std::uint16_t>(a));
        alpha_open_sets = collect(alpha_open_of);
        semi_open_sets = collect(semi_open_of);
        semi_closed_sets = collect(semi_closed_of);
        for (int vi = 0; vi < 2; ++vi) alpha_m_closed_sets[vi] = collect(alpha_m_closed_of[vi]);

        auto family_closure_table = [&](auto is_member) {
            std::vector<std::uint16_t> out(count);
            for (std::uint32_t a = 0; a <= full; ++a) {
                std::uint32_t acc = full;
                for_each_superset(a, full, [&](std::uint32_t u) {
                    if (is_member(u)) {
                        acc &= u;
                        if (acc == a) return false;
                    }
                    return true;
                });
                out[a] = static_cast<std::uint16_t>(acc);
            }
            return out;
        };
        alpha_closure_of = family_closure_table([&](std::uint32_t u) { return alpha_open_of[~u & full] != 0; });
        semi_closure_of = family_closure_table([&](std::uint32_t u) { return semi_open_of[~u & full] != 0; });
        pre_closure_of = family_closure_table([&](std::uint32_t u) { return pre_open_of[~u & full] != 0; });
        for (int vi = 0; vi < 2; ++vi)
            closure_star_of[vi] =
                family_closure_table([&](std::uint32_t u) { return alpha_m_closed_of[vi][u] != 0; });
    }

    bool is_open(std::uint32_t a) const { return space.is_open_bits(a); }
    bool is_closed(std::uint32_t a) const { return space.is_closed_bits(a); }
    bool is_alpha_m_closed(std::uint32_t a, AlphaMVariant v) const {
        return alpha_m_closed_of[variant_index(v)][a] != 0;
    }
    const std::vector<std::uint16_t>& alpha_m_members(AlphaMVariant v) const {
        return alpha_m_closed_sets[variant_index(v)];
    }
    std::uint32_t closure_star(std::uint32_t a, AlphaMVariant v) const {
        return closure_star_of[variant_index(v)][a];
    }

private:
    const std::vector<std::uint8_t>& space_open_flags() {
        if (open_flags_.empty()) {
            open_flags_.resize(space.subset_count());
            for (std::uint32_t a = 0; a <= full; ++a) open_flags_[a] = space.is_open_bits(a) ? 1 : 0;
        }
        return open_flags_;
    }
    std::vector<std::uint8_t> open_flags_;
};

/// Materialize one derived family with its explicit axiom check.
inline DerivedFamily derived_family(const SpaceTables& t, FamilyKind kind,
                                    AlphaMVariant variant = kDefaultVariant) {
    DerivedFamily out;
    out.kind = kind;
    out.n = t.n;
    const std::vector<std::uint8_t>* flags = nullptr;
    switch (kind) {
        case FamilyKind::alpha_open: flags = &t.alpha_open_of; break;
        case FamilyKind::semi_open: flags = &t.semi_open_of; break;
        case FamilyKind::pre_open: flags = &t.pre_open_of; break;
        case FamilyKind::beta_open: flags = &t.beta_open_of; break;
        case FamilyKind::alpha_m_closed:
            flags = &t.alpha_m_closed_of[variant_index(variant)];
            out.variant = variant;
            break;
    }
    out.member_lookup = *flags;
    for (std::uint32_t a = 0; a <= t.full; ++a)
        if ((*flags)[a]) out.members.push_back(static_cast<std::uint16_t>(a));
    out.topology_failure = family_topology_failure(t.n, std::span<const std::uint16_t>(out.members));
    return out;
}

inline DerivedFamily derived_family(const FiniteSpace& s, FamilyKind kind,
                                    AlphaMVariant variant = kDefaultVariant) {
    return derived_family(SpaceTables(s), kind, variant);
}

/// Smallest closed-of-kind superset for cl/acl/scl/pcl; for cl* the bare
/// intersection of alpha-m closed supersets, which need not itself be
/// alpha-m closed.
inline std::uint32_t generalized_closure_bits(const SpaceTables& t, ClosureKind kind, std::uint32_t a,
                                              AlphaMVariant variant = kDefaultVariant) {
    switch (kind) {
        case ClosureKind::closure: return t.closure_of[a];
        case ClosureKind::alpha_closure: return t.alpha_closure_of[a];
        case ClosureKind::semi_closure: return t.semi_closure_of[a];
        case ClosureKind::pre_closure: return t.pre_closure_of[a];
        case ClosureKind::closure_star: return t.closure_star_of[variant_index(variant)][a];
    }
    return a;
}

inline SubsetMask generalized_closure(const SpaceTables& t, ClosureKind kind, SubsetMask a,
                                      AlphaMVariant variant = kDefaultVariant) {
    return SubsetMask(generalized_closure_bits(t, kind, a.bits(), variant), t.n);
}

/// Result of the tau-star construction: the family {G : cl*(complement G) is
/// its own cl*} together with either the validated space or the axiom
/// violation. Failure is data, not an exception.
struct TauStarOutcome {
    AlphaMVariant variant;
    std::vector<std::uint16_t> family;  ///< ascending, always populated
    std::optional<FiniteSpace> space;
    std::optional<TopologyError> failure;

    bool is_topology() const { return space.has_value(); }
};

inline TauStarOutcome tau_star(const SpaceTables& t, AlphaMVariant variant = kDefaultVariant) {
    TauStarOutcome out;
    out.variant = variant;
    const auto& star = t.closure_star_of[variant_index(variant)];
    for (std::uint32_t g = 0; g <= t.full; ++g) {
        const std::uint32_t gc = ~g & t.full;
        if (star[gc] == gc) out.family.push_back(static_cast<std::uint16_t>(g));
    }
    TopologyResult r = validate_topology(t.n, std::span<const std::uint16_t>(out.family));
    if (auto* err = std::get_if<TopologyError>(&r))
        out.failure = *err;
    else
        out.space = std::get<FiniteSpace>(std::move(r));
    return out;
}

inline TauStarOutcome tau_star(const FiniteSpace& s, AlphaMVariant variant = kDefaultVariant) {
    return tau_star(SpaceTables(s), variant);
}

}  // namespace fintop
