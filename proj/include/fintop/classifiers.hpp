#pragma once

// Membership predicates for the generalized set classes and map classes,
// plus full classification vectors. Quantified predicates stop at the first
// violating witness and can report it.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "fintop/map.hpp"
#include "fintop/operators.hpp"

namespace fintop {

enum class SetClass : int {
    open,
    closed,
    pre_open,
    pre_closed,
    semi_open,
    semi_closed,
    alpha_open,
    alpha_closed,
    beta_open,
    beta_closed,
    g_closed,
    g_alpha_closed,
    wg_closed,
    wg_alpha_closed,
    alpha_m_closed,
    sg_closed,
    alpha_g_closed,
    w_closed,
};
inline constexpr int kSetClassCount = 18;

inline constexpr std::array<SetClass, kSetClassCount> kAllSetClasses = {
    SetClass::open,          SetClass::closed,       SetClass::pre_open,
    SetClass::pre_closed,    SetClass::semi_open,    SetClass::semi_closed,
    SetClass::alpha_open,    SetClass::alpha_closed, SetClass::beta_open,
    SetClass::beta_closed,   SetClass::g_closed,     SetClass::g_alpha_closed,
    SetClass::wg_closed,     SetClass::wg_alpha_closed, SetClass::alpha_m_closed,
    SetClass::sg_closed,     SetClass::alpha_g_closed,  SetClass::w_closed,
};

inline std::string to_string(SetClass c) {
    switch (c) {
        case SetClass::open: return "open";
        case SetClass::closed: return "closed";
        case SetClass::pre_open: return "pre-open";
        case SetClass::pre_closed: return "pre-closed";
        case SetClass::semi_open: return "semi-open";
        case SetClass::semi_closed: return "semi-closed";
        case SetClass::alpha_open: return "alpha-open";
        case SetClass::alpha_closed: return "alpha-closed";
        case SetClass::beta_open: return "beta-open";
        case SetClass::beta_closed: return "beta-closed";
        case SetClass::g_closed: return "g-closed";
        case SetClass::g_alpha_closed: return "g-alpha-closed";
        case SetClass::wg_closed: return "wg-closed";
        case SetClass::wg_alpha_closed: return "wg-alpha-closed";
        case SetClass::alpha_m_closed: return "alpha-m-closed";
        case SetClass::sg_closed: return "sg-closed";
        case SetClass::alpha_g_closed: return "alpha-g-closed";
        case SetClass::w_closed: return "w-closed";
    }
    return "?";
}

enum class MapClass : int {
    continuous,
    g_continuous,
    sg_continuous,
    alpha_g_continuous,
    wg_continuous,
    w_continuous,
    irresolute,
    alpha_m_continuous,
    alpha_m_irresolute,
    closed_map,
    alpha_m_closed_map,
};
inline constexpr int kMapClassCount = 11;

inline constexpr std::array<MapClass, kMapClassCount> kAllMapClasses = {
    MapClass::continuous,        MapClass::g_continuous,   MapClass::sg_continuous,
    MapClass::alpha_g_continuous, MapClass::wg_continuous, MapClass::w_continuous,
    MapClass::irresolute,        MapClass::alpha_m_continuous,
    MapClass::alpha_m_irresolute, MapClass::closed_map,    MapClass::alpha_m_closed_map,
};

inline std::string to_string(MapClass c) {
    switch (c) {
        case MapClass::continuous: return "continuous";
        case MapClass::g_continuous: return "g-continuous";
        case MapClass::sg_continuous: return "sg-continuous";
        case MapClass::alpha_g_continuous: return "alpha-g-continuous";
        case MapClass::wg_continuous: return "wg-continuous";
        case MapClass::w_continuous: return "w-continuous";
        case MapClass::irresolute: return "irresolute";
        case MapClass::alpha_m_continuous: return "alpha-m-continuous";
        case MapClass::alpha_m_irresolute: return "alpha-m-irresolute";
        case MapClass::closed_map: return "closed-map";
        case MapClass::alpha_m_closed_map: return "alpha-m-closed-map";
    }
    return "?";
}

namespace detail {

/// First witness U (ascending) in the flagged family with a <= U and
/// target not<= U; the shape shared by every "whenever A <= U" class.
inline std::optional<std::uint32_t> first_uncovered_witness(std::uint32_t a, std::uint32_t target,
                                                            const std::vector<std::uint8_t>& family,
                                                            std::uint32_t full) {
    std::optional<std::uint32_t> hit;
    for_each_superset(a, full, [&](std::uint32_t u) {
        if (family[u] && !bits_subset(target, u)) {
            hit = u;
            return false;
        }
        return true;
    });
    return hit;
}

}  // namespace detail

/// alpha-m closedness with the violating witness, if any.
inline std::optional<SubsetMask> alpha_m_closed_violator(const SpaceTables& t, SubsetMask a,
                                                         AlphaMVariant variant) {
    const std::uint32_t target = t.interior_of[t.closure_of[a.bits()]];
    std::optional<std::uint32_t> hit;
    if (variant == AlphaMVariant::alpha_open_witnesses) {
        hit = detail::first_uncovered_witness(a.bits(), target, t.alpha_open_of, t.full);
    } else {
        std::optional<std::uint32_t> found;
        for_each_superset(a.bits(), t.full, [&](std::uint32_t u) {
            if (t.is_open(u) && !bits_subset(target, u)) {
                found = u;
                return false;
            }
            return true;
        });
        hit = found;
    }
    if (!hit) return std::nullopt;
    return SubsetMask(*hit, t.n);
}

inline bool is_alpha_m_closed(const SpaceTables& t, SubsetMask a, AlphaMVariant variant) {
    return t.is_alpha_m_closed(a.bits(), variant);
}

inline bool is_alpha_m_closed(const FiniteSpace& s, SubsetMask a, AlphaMVariant variant) {
    return SpaceTables(s).is_alpha_m_closed(a.bits(), variant);
}

inline bool subset_has_class(const SpaceTables& t, std::uint32_t a, SetClass c, AlphaMVariant variant) {
    switch (c) {
        case SetClass::open: return t.is_open(a);
        case SetClass::closed: return t.is_closed(a);
        case SetClass::pre_open: return t.pre_open_of[a] != 0;
        case SetClass::pre_closed: return t.pre_closed_of[a] != 0;
        case SetClass::semi_open: return t.semi_open_of[a] != 0;
        case SetClass::semi_closed: return t.semi_closed_of[a] != 0;
        case SetClass::alpha_open: return t.alpha_open_of[a] != 0;
        case SetClass::alpha_closed: return t.alpha_closed_of[a] != 0;
        case SetClass::beta_open: return t.beta_open_of[a] != 0;
        case SetClass::beta_closed: return t.beta_closed_of[a] != 0;
        case SetClass::alpha_m_closed: return t.is_alpha_m_closed(a, variant);
        default: break;
    }
    // The remaining classes all quantify "operator(A) <= U whenever A <= U
    // and U lies in a witness family".
    auto covered = [&](std::uint32_t target, auto in_family) {
        bool ok = true;
        for_each_superset(a, t.full, [&](std::uint32_t u) {
            if (in_family(u) && !bits_subset(target, u)) {
                ok = false;
                return false;
            }
            return true;
        });
        return ok;
    };
    auto open_f = [&](std::uint32_t u) { return t.is_open(u); };
    auto alpha_open_f = [&](std::uint32_t u) { return t.alpha_open_of[u] != 0; };
    auto semi_open_f = [&](std::uint32_t u) { return t.semi_open_of[u] != 0; };
    switch (c) {
        case SetClass::g_closed: return covered(t.closure_of[a], open_f);
        case SetClass::g_alpha_closed: return covered(t.alpha_closure_of[a], alpha_open_f);
        case SetClass::wg_closed: return covered(t.closure_of[t.interior_of[a]], open_f);
        case SetClass::wg_alpha_closed: return covered(t.alpha_closure_of[t.interior_of[a]], alpha_open_f);
        case SetClass::sg_closed: return covered(t.semi_closure_of[a], semi_open_f);
        case SetClass::alpha_g_closed: return covered(t.alpha_closure_of[a], open_f);
        case SetClass::w_closed: return covered(t.closure_of[a], semi_open_f);
        default: return false;
    }
}

/// Open-side duals used by the map classes: A is kind-open iff its
/// complement is kind-closed.
inline bool subset_has_open_dual(const SpaceTables& t, std::uint32_t a, SetClass closed_kind,
                                 AlphaMVariant variant) {
    return subset_has_class(t, ~a & t.full, closed_kind, variant);
}

/// Which classes one subset satisfies. `satisfied` has one bit per SetClass.
struct SetClassification {
    SubsetMask subject;
    AlphaMVariant variant = kDefaultVariant;
    std::uint32_t satisfied = 0;

    bool has(SetClass c) const { return (satisfied >> static_cast<int>(c)) & 1u; }
};

inline SetClassification classify_subset(const SpaceTables& t, SubsetMask a,
                                         AlphaMVariant variant = kDefaultVariant) {
    SetClassification out;
    out.subject = a;
    out.variant = variant;
    for (SetClass c : kAllSetClasses)
        if (subset_has_class(t, a.bits(), c, variant)) out.satisfied |= 1u << static_cast<int>(c);
    return out;
}

// ---- map classes ----------------------------------------------------------

inline bool map_has_class(const SpaceTables& x, const SpaceTables& y,
                          std::span<const std::uint8_t> image, MapClass c,
                          AlphaMVariant variant = kDefaultVariant) {
    switch (c) {
        case MapClass::continuous:
            for (std::uint16_t v : y.space.opens())
                if (!x.is_open(preimage_bits(image, v))) return false;
            return true;
        case MapClass::g_continuous:
            for (std::uint16_t v : y.closed_sets)
                if (!subset_has_class(x, preimage_bits(image, v), SetClass::g_closed, variant)) return false;
            return true;
        case MapClass::sg_continuous:
            for (std::uint16_t v : y.closed_sets)
                if (!subset_has_class(x, preimage_bits(image, v), SetClass::sg_closed, variant)) return false;
            return true;
        case MapClass::alpha_g_continuous:
            for (std::uint16_t v : y.space.opens())
                if (!subset_has_open_dual(x, preimage_bits(image, v), SetClass::alpha_g_closed, variant))
                    return false;
            return true;
        case MapClass::wg_continuous:
            for (std::uint16_t v : y.space.opens())
                if (!subset_has_open_dual(x, preimage_bits(image, v), SetClass::wg_closed, variant))
                    return false;
            return true;
        case MapClass::w_continuous:
            for (std::uint16_t v : y.space.opens())
                if (!subset_has_open_dual(x, preimage_bits(image, v), SetClass::w_closed, variant))
                    return false;
            return true;
        case MapClass::irresolute:
            for (std::uint16_t v : y.semi_closed_sets)
                if (!x.semi_closed_of[preimage_bits(image, v)]) return false;
            return true;
        case MapClass::alpha_m_continuous:
            for (std::uint16_t v : y.closed_sets)
                if (!x.is_alpha_m_closed(preimage_bits(image, v), variant)) return false;
            return true;
        case MapClass::alpha_m_irresolute:
            for (std::uint16_t v : y.alpha_m_members(variant))
                if (!x.is_alpha_m_closed(preimage_bits(image, v), variant)) return false;
            return true;
        case MapClass::closed_map:
            for (std::uint16_t f : x.closed_sets)
                if (!y.is_closed(image_bits(image, f))) return false;
            return true;
        case MapClass::alpha_m_closed_map:
            for (std::uint16_t f : x.closed_sets)
                if (!y.is_alpha_m_closed(image_bits(image, f), variant)) return false;
            return true;
    }
    return false;
}

/// First failure of alpha-m continuity: the closed codomain set whose
/// preimage is not alpha-m closed, plus that preimage's violating witness.
struct AlphaMContinuityViolation {
    SubsetMask closed_set;  ///< in the codomain
    SubsetMask preimage;    ///< in the domain
    SubsetMask witness;     ///< witness superset showing the preimage fails
};

inline std::optional<AlphaMContinuityViolation> alpha_m_continuity_violation(
    const SpaceTables& x, const SpaceTables& y, std::span<const std::uint8_t> image,
    AlphaMVariant variant) {
    for (std::uint16_t v : y.closed_sets) {
        const std::uint32_t pre = preimage_bits(image, v);
        if (!x.is_alpha_m_closed(pre, variant)) {
            auto witness = alpha_m_closed_violator(x, SubsetMask(pre, x.n), variant);
            return AlphaMContinuityViolation{SubsetMask(v, y.n), SubsetMask(pre, x.n),
                                             witness.value_or(SubsetMask(pre, x.n))};
        }
    }
    return std::nullopt;
}

/// The two formulations of alpha-m continuity, evaluated independently:
/// preimages of closed sets are alpha-m closed vs preimages of open sets
/// have alpha-m closed complements. Returns whether they agree.
inline bool open_closed_formulation_agrees(const SpaceTables& x, const SpaceTables& y,
                                           std::span<const std::uint8_t> image,
                                           AlphaMVariant variant) {
    bool closed_form = true;
    for (std::uint16_t v : y.closed_sets)
        if (!x.is_alpha_m_closed(preimage_bits(image, v), variant)) {
            closed_form = false;
            break;
        }
    bool open_form = true;
    for (std::uint16_t v : y.space.opens())
        if (!x.is_alpha_m_closed(~preimage_bits(image, v) & x.full, variant)) {
            open_form = false;
            break;
        }
    return closed_form == open_form;
}

struct MapClassification {
    AlphaMVariant variant = kDefaultVariant;
    std::uint32_t satisfied = 0;

    bool has(MapClass c) const { return (satisfied >> static_cast<int>(c)) & 1u; }
};

inline MapClassification classify_map(const SpaceTables& x, const SpaceTables& y,
                                      std::span<const std::uint8_t> image,
                                      AlphaMVariant variant = kDefaultVariant) {
    MapClassification out;
    out.variant = variant;
    for (MapClass c : kAllMapClasses)
        if (map_has_class(x, y, image, c, variant)) out.satisfied |= 1u << static_cast<int>(c);
    return out;
}

inline MapClassification classify_map(const PointMap& f, AlphaMVariant variant = kDefaultVariant) {
    return classify_map(SpaceTables(f.domain()), SpaceTables(f.codomain()), f.image_array(), variant);
}

}  // namespace fintop
