#pragma once

// Definitions of the built-in claims. Split out of claims.hpp to keep the
// engine and the catalog readable on their own; include claims.hpp, not this.

#include <algorithm>

#include "fintop/claims.hpp"

namespace fintop {
namespace detail {

inline bool image_surjective_onto(const SpaceTables& x, const SpaceTables& y,
                                  std::span<const std::uint8_t> image) {
    return image_bits(image, x.full) == y.full;
}

inline bool image_injective(std::span<const std::uint8_t> image) {
    std::uint32_t seen = 0;
    for (std::uint8_t p : image) {
        const std::uint32_t bit = 1u << p;
        if (seen & bit) return false;
        seen |= bit;
    }
    return true;
}

// ---- composition claims -------------------------------------------------------

/// A composition claim is a boolean formula over per-leg properties. Each
/// leg's properties are packed into one byte per map, precomputed per space
/// pair; `violated` combines the bytes for f, g and the composite g of f.
struct TripleClaimDef {
    using Bits = std::function<std::uint8_t(const SpaceTables&, const SpaceTables&,
                                            std::span<const std::uint8_t>, AlphaMVariant)>;
    Bits f_bits, g_bits, comp_bits;
    std::uint8_t f_require = 1;  ///< only iterate f whose bits contain this mask
    std::uint8_t g_require = 1;
    std::function<bool(std::uint8_t, std::uint8_t, std::uint8_t)> violated;
    std::string violation_text;
};

struct TriplePrecompute {
    // props[d][c][map index] for each leg, over the relevant universes.
    std::vector<std::vector<std::vector<std::uint8_t>>> f_props, g_props, comp_props;
    // all_images[dn][cn] lists every image array once, by index.
    std::vector<std::vector<std::vector<std::vector<std::uint8_t>>>> images_by_size;
};

inline ClaimVerdict run_triple_claim(const ClaimContext& ctx, const std::string& id,
                                     const TripleClaimDef& def) {
    ClaimVerdict verdict;
    verdict.claim_id = id;
    verdict.variant = ctx.variant;
    verdict.budget = ctx.budget;

    Universe domain_u = universe_within(*ctx.store, ctx.budget.max_domain_n, ctx.budget.max_witness_spaces);
    Universe mid_u = universe_within(*ctx.store, ctx.budget.max_codomain_n, ctx.budget.max_witness_spaces);
    const Universe& cod_u = mid_u;  // middle and final codomain share one budget

    const std::size_t nd = domain_u.refs.size(), nc = mid_u.refs.size();

    auto precompute_leg = [&](const Universe& from, const Universe& to,
                              const TripleClaimDef::Bits& bits,
                              std::vector<std::vector<std::vector<std::uint8_t>>>& out) -> bool {
        out.assign(from.refs.size(), {});
        for (std::size_t i = 0; i < from.refs.size(); ++i) {
            if (deadline_passed(ctx.deadline)) return false;
            out[i].assign(to.refs.size(), {});
            const SpaceTables& a = from.tables(from.refs[i]);
            for (std::size_t j = 0; j < to.refs.size(); ++j) {
                const SpaceTables& b = to.tables(to.refs[j]);
                auto& cell = out[i][j];
                cell.reserve(static_cast<std::size_t>(map_count(a.n, b.n)));
                for_each_map_image(a.n, b.n, [&](std::span<const std::uint8_t> image) {
                    cell.push_back(bits(a, b, image, ctx.variant));
                });
            }
        }
        return true;
    };

    TriplePrecompute pre;
    if (!precompute_leg(domain_u, mid_u, def.f_bits, pre.f_props) ||
        !precompute_leg(mid_u, cod_u, def.g_bits, pre.g_props) ||
        !precompute_leg(domain_u, cod_u, def.comp_bits, pre.comp_props)) {
        verdict.outcome = ClaimOutcome::budget_exceeded;
        return verdict;
    }

    const int max_n = std::max(ctx.budget.max_domain_n, ctx.budget.max_codomain_n);
    pre.images_by_size.assign(static_cast<std::size_t>(max_n) + 1, {});
    for (int a = 1; a <= max_n; ++a) {
        pre.images_by_size[static_cast<std::size_t>(a)].resize(static_cast<std::size_t>(max_n) + 1);
        for (int b = 1; b <= max_n; ++b) {
            auto& cell = pre.images_by_size[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            for_each_map_image(a, b, [&](std::span<const std::uint8_t> image) {
                cell.emplace_back(image.begin(), image.end());
            });
        }
    }

    auto scan = [&](std::uint64_t chunk) -> std::optional<WitnessBundle> {
        const std::size_t zi = static_cast<std::size_t>(chunk % nc);
        const std::size_t yi = static_cast<std::size_t>((chunk / nc) % nc);
        const std::size_t xi = static_cast<std::size_t>(chunk / (nc * nc));
        const SpaceTables& x = domain_u.tables(domain_u.refs[xi]);
        const SpaceTables& y = mid_u.tables(mid_u.refs[yi]);
        const SpaceTables& z = cod_u.tables(cod_u.refs[zi]);
        const auto& fp = pre.f_props[xi][yi];
        const auto& gp = pre.g_props[yi][zi];
        const auto& cp = pre.comp_props[xi][zi];
        const auto& f_images = pre.images_by_size[static_cast<std::size_t>(x.n)][static_cast<std::size_t>(y.n)];
        const auto& g_images = pre.images_by_size[static_cast<std::size_t>(y.n)][static_cast<std::size_t>(z.n)];

        std::vector<std::uint8_t> comp(static_cast<std::size_t>(x.n));
        for (std::size_t fi = 0; fi < fp.size(); ++fi) {
            if ((fp[fi] & def.f_require) != def.f_require) continue;
            const auto& f_image = f_images[fi];
            for (std::size_t gi = 0; gi < gp.size(); ++gi) {
                if ((gp[gi] & def.g_require) != def.g_require) continue;
                const auto& g_image = g_images[gi];
                for (int p = 0; p < x.n; ++p)
                    comp[static_cast<std::size_t>(p)] = g_image[f_image[static_cast<std::size_t>(p)]];
                const std::uint64_t ci = map_index_of(comp, z.n);
                if (def.violated(fp[fi], gp[gi], cp[static_cast<std::size_t>(ci)])) {
                    WitnessBundle bundle;
                    bundle.spaces.push_back(witness_space(domain_u, domain_u.refs[xi], "domain"));
                    bundle.spaces.push_back(witness_space(mid_u, mid_u.refs[yi], "middle"));
                    bundle.spaces.push_back(witness_space(cod_u, cod_u.refs[zi], "codomain"));
                    bundle.maps.push_back(WitnessMap{0, 1, f_image, "f"});
                    bundle.maps.push_back(WitnessMap{1, 2, g_image, "g"});
                    bundle.detail = def.violation_text;
                    return bundle;
                }
            }
        }
        return std::nullopt;
    };

    const std::uint64_t chunk_count = static_cast<std::uint64_t>(nd) * nc * nc;
    SweepOutcome<WitnessBundle> outcome =
        sweep_first_hit<WitnessBundle>(chunk_count, ctx.workers, ctx.deadline, scan);
    if (outcome.time_exceeded) {
        verdict.outcome = ClaimOutcome::budget_exceeded;
        return verdict;
    }
    if (outcome.first) {
        verdict.outcome = ClaimOutcome::counterexample;
        verdict.witness = std::move(outcome.first->second);
    }
    return verdict;
}

inline std::function<bool(const WitnessBundle&, AlphaMVariant)> triple_replay(TripleClaimDef def) {
    return [def = std::move(def)](const WitnessBundle& bundle, AlphaMVariant variant) {
        if (bundle.spaces.size() < 3 || bundle.maps.size() < 2) return false;
        SpaceTables x(bundle.spaces[0].space);
        SpaceTables y(bundle.spaces[1].space);
        SpaceTables z(bundle.spaces[2].space);
        const auto& f_image = bundle.maps[0].image;
        const auto& g_image = bundle.maps[1].image;
        std::vector<std::uint8_t> comp(f_image.size());
        for (std::size_t p = 0; p < f_image.size(); ++p) comp[p] = g_image[f_image[p]];
        const std::uint8_t f8 = def.f_bits(x, y, f_image, variant);
        const std::uint8_t g8 = def.g_bits(y, z, g_image, variant);
        const std::uint8_t c8 = def.comp_bits(x, z, comp, variant);
        if ((f8 & def.f_require) != def.f_require) return false;
        if ((g8 & def.g_require) != def.g_require) return false;
        return def.violated(f8, g8, c8);
    };
}

// ---- pasting claim --------------------------------------------------------------

inline ClaimVerdict run_pasting_claim(const ClaimContext& ctx, const std::string& id) {
    ClaimVerdict verdict;
    verdict.claim_id = id;
    verdict.variant = ctx.variant;
    verdict.budget = ctx.budget;

    Universe domain_u = universe_within(*ctx.store, ctx.budget.max_domain_n, ctx.budget.max_witness_spaces);
    Universe codomain_u = universe_within(*ctx.store, ctx.budget.max_codomain_n, ctx.budget.max_witness_spaces);

    auto scan = [&](std::uint64_t chunk) -> std::optional<WitnessBundle> {
        const SpaceRef dr = domain_u.refs[static_cast<std::size_t>(chunk / codomain_u.refs.size())];
        const SpaceRef cr = codomain_u.refs[static_cast<std::size_t>(chunk % codomain_u.refs.size())];
        const SpaceTables& x = domain_u.tables(dr);
        const SpaceTables& y = codomain_u.tables(cr);
        auto v = scan_pasting_chunk(x, y, ctx.variant);
        if (!v) return std::nullopt;
        WitnessBundle bundle;
        bundle.spaces.push_back(witness_space(domain_u, dr, "domain"));
        bundle.spaces.push_back(witness_space(codomain_u, cr, "codomain"));
        bundle.subsets.push_back(WitnessSubset{0, SubsetMask(v->a, x.n), "piece A"});
        bundle.subsets.push_back(WitnessSubset{0, SubsetMask(v->b, x.n), "piece B"});
        bundle.maps.push_back(WitnessMap{0, 1, std::move(v->image), "combined map"});
        bundle.detail = std::move(v->detail);
        return bundle;
    };

    const std::uint64_t pair_count =
        static_cast<std::uint64_t>(domain_u.refs.size()) * codomain_u.refs.size();
    SweepOutcome<WitnessBundle> outcome =
        sweep_first_hit<WitnessBundle>(pair_count, ctx.workers, ctx.deadline, scan);
    if (outcome.time_exceeded) {
        verdict.outcome = ClaimOutcome::budget_exceeded;
        return verdict;
    }
    if (outcome.first) {
        verdict.outcome = ClaimOutcome::counterexample;
        verdict.witness = std::move(outcome.first->second);
    }
    return verdict;
}

inline bool pasting_witness_violates(const WitnessBundle& bundle, AlphaMVariant variant) {
    if (bundle.spaces.size() < 2 || bundle.subsets.size() < 2 || bundle.maps.empty()) return false;
    SpaceTables x(bundle.spaces[0].space);
    SpaceTables y(bundle.spaces[1].space);
    const std::uint32_t a = bundle.subsets[0].subset.bits();
    const std::uint32_t b = bundle.subsets[1].subset.bits();
    const auto& image = bundle.maps[0].image;
    if (!x.is_alpha_m_closed(a, variant) || !x.is_alpha_m_closed(b, variant)) return false;
    if ((a | b) != x.full) return false;
    auto piece_continuous = [&](std::uint32_t piece) {
        if (piece == 0) return true;
        const Subspace sub = subspace(x.space, SubsetMask(piece, x.n));
        SpaceTables sub_tables(sub.space);
        return map_has_class(sub_tables, y, restrict_image(image, sub),
                             MapClass::alpha_m_continuous, variant);
    };
    if (!piece_continuous(a) || !piece_continuous(b)) return false;
    return !map_has_class(x, y, image, MapClass::alpha_m_continuous, variant);
}

// ---- the fixed reference instance ------------------------------------------------

inline ClaimVerdict run_reference_instance_claim(const ClaimContext& ctx, const std::string& id) {
    ClaimVerdict verdict;
    verdict.claim_id = id;
    verdict.variant = ctx.variant;
    verdict.budget = ctx.budget;

    const ReferenceInstance& ri = variant_divergence_instance();
    SpaceTables x(ri.domain);
    SpaceTables y(ri.codomain);
    const std::span<const std::uint8_t> image(ri.image);

    const bool am = map_has_class(x, y, image, MapClass::alpha_m_continuous, ctx.variant);
    const bool cont = map_has_class(x, y, image, MapClass::continuous, ctx.variant);
    if (am && !cont) return verdict;  // verified

    WitnessBundle bundle;
    bundle.spaces.push_back(WitnessSpace{ri.domain, "domain"});
    bundle.spaces.push_back(WitnessSpace{ri.codomain, "codomain"});
    bundle.maps.push_back(WitnessMap{0, 1, ri.image, "f"});
    if (!am) {
        auto v = alpha_m_continuity_violation(x, y, image, ctx.variant);
        bundle.detail = "map is not alpha-m continuous under this witness family: preimage of closed " +
                        role_subset(y, v->closed_set.bits(), 1) + " is " +
                        role_subset(x, v->preimage.bits(), 0) + " (witness " +
                        role_subset(x, v->witness.bits(), 0) + ")";
        bundle.subsets.push_back(WitnessSubset{1, v->closed_set, "closed set"});
        bundle.subsets.push_back(WitnessSubset{0, v->preimage, "preimage"});
        bundle.subsets.push_back(WitnessSubset{0, v->witness, "witness superset"});
    } else {
        bundle.detail = "map is continuous, so the instance does not separate the two notions";
    }
    verdict.outcome = ClaimOutcome::counterexample;
    verdict.witness = std::move(bundle);
    return verdict;
}

inline bool reference_instance_violates(const WitnessBundle& bundle, AlphaMVariant variant) {
    if (bundle.spaces.size() < 2 || bundle.maps.empty()) return false;
    SpaceTables x(bundle.spaces[0].space);
    SpaceTables y(bundle.spaces[1].space);
    const std::span<const std::uint8_t> image(bundle.maps[0].image);
    const bool am = map_has_class(x, y, image, MapClass::alpha_m_continuous, variant);
    const bool cont = map_has_class(x, y, image, MapClass::continuous, variant);
    return !(am && !cont);
}

// ---- property bytes for the composition claims ------------------------------------

inline std::uint8_t bit_alpha_m_irresolute(const SpaceTables& a, const SpaceTables& b,
                                           std::span<const std::uint8_t> image, AlphaMVariant v) {
    return map_has_class(a, b, image, MapClass::alpha_m_irresolute, v) ? 1 : 0;
}

inline std::uint8_t bit_alpha_m_continuous(const SpaceTables& a, const SpaceTables& b,
                                           std::span<const std::uint8_t> image, AlphaMVariant v) {
    return map_has_class(a, b, image, MapClass::alpha_m_continuous, v) ? 1 : 0;
}

inline std::uint8_t bit_alpha_m_closed_map(const SpaceTables& a, const SpaceTables& b,
                                           std::span<const std::uint8_t> image, AlphaMVariant v) {
    return map_has_class(a, b, image, MapClass::alpha_m_closed_map, v) ? 1 : 0;
}

inline std::uint8_t bit_continuous_surjective(const SpaceTables& a, const SpaceTables& b,
                                              std::span<const std::uint8_t> image, AlphaMVariant v) {
    return (map_has_class(a, b, image, MapClass::continuous, v) && image_surjective_onto(a, b, image))
               ? 1
               : 0;
}

inline std::uint8_t bit_irresolute_injective(const SpaceTables& a, const SpaceTables& b,
                                             std::span<const std::uint8_t> image, AlphaMVariant v) {
    return (map_has_class(a, b, image, MapClass::irresolute, v) && image_injective(image)) ? 1 : 0;
}

inline std::uint8_t bit_alpha_m_irresolute_injective(const SpaceTables& a, const SpaceTables& b,
                                                     std::span<const std::uint8_t> image,
                                                     AlphaMVariant v) {
    return (map_has_class(a, b, image, MapClass::alpha_m_irresolute, v) && image_injective(image))
               ? 1
               : 0;
}

}  // namespace detail

inline const std::vector<ClaimSpec>& registered_claims() {
    static const std::vector<ClaimSpec> claims = [] {
        using detail::MapPredicate;
        std::vector<ClaimSpec> out;

        const std::string map_universe =
            "ordered pairs of catalog spaces (domain within max-domain-n, codomain within "
            "max-codomain-n), then maps by lexicographic index";
        const std::string space_universe = "catalog spaces within max-domain-n";
        const std::string triple_universe =
            "ordered triples of catalog spaces (domain within max-domain-n; middle and final "
            "codomain within max-codomain-n), then map pairs (f, g) by lexicographic index";

        auto map_claim = [&](std::string id, ClaimKind kind, std::string statement,
                             std::string universe, MapPredicate pred, bool fatal = false) {
            ClaimSpec spec;
            spec.id = std::move(id);
            spec.kind = kind;
            spec.statement = std::move(statement);
            spec.universe = std::move(universe);
            spec.fatal_on_violation = fatal;
            spec.run = [id = spec.id, pred](const ClaimContext& ctx) {
                return detail::run_map_pair_claim(ctx, id, pred);
            };
            spec.replay = detail::map_pair_replay(pred);
            out.push_back(std::move(spec));
        };

        auto space_claim = [&](std::string id, ClaimKind kind, std::string statement,
                               std::string universe, detail::SpacePredicate pred) {
            ClaimSpec spec;
            spec.id = std::move(id);
            spec.kind = kind;
            spec.statement = std::move(statement);
            spec.universe = std::move(universe);
            spec.run = [id = spec.id, pred](const ClaimContext& ctx) {
                return detail::run_space_claim(ctx, id, pred);
            };
            spec.replay = detail::space_replay(pred);
            out.push_back(std::move(spec));
        };

        auto triple_claim = [&](std::string id, std::string statement,
                                detail::TripleClaimDef def) {
            ClaimSpec spec;
            spec.id = std::move(id);
            spec.kind = ClaimKind::composition_law;
            spec.statement = std::move(statement);
            spec.universe = triple_universe;
            spec.run = [id = spec.id, def](const ClaimContext& ctx) {
                return detail::run_triple_claim(ctx, id, def);
            };
            spec.replay = detail::triple_replay(def);
            out.push_back(std::move(spec));
        };

        map_claim("C-3.2-fwd", ClaimKind::implication_over_maps,
                  "every continuous map is alpha-m continuous", map_universe,
                  detail::violates_32_fwd);
        map_claim("C-3.2-conv", ClaimKind::implication_over_maps,
                  "every alpha-m continuous map is continuous", map_universe,
                  detail::violates_32_conv);
        map_claim("C-3.4-I", ClaimKind::equality_of_operators,
                  "the closed-preimage and open-preimage formulations of alpha-m continuity agree",
                  map_universe, detail::violates_34_I, /*fatal=*/true);
        map_claim("C-3.4-II", ClaimKind::implication_over_maps,
                  "for an alpha-m continuous map, the image of cl*(A) lies inside the closure of "
                  "the image of A, for every subset A",
                  map_universe + ", then subsets A ascending", detail::violates_34_II);
        map_claim("C-3.4-III-ab", ClaimKind::equality_of_operators,
                  "the pointwise alpha-m neighbourhood condition holds exactly when images of cl* "
                  "are bounded by closures of images",
                  map_universe, detail::violates_34_III_ab);
        map_claim("C-3.5", ClaimKind::implication_over_maps,
                  "restrictions of an alpha-m continuous map to non-empty closed carriers remain "
                  "alpha-m continuous for the relative topology",
                  map_universe +
                      ", then non-empty closed carriers H ascending; carriers are closed subsets "
                      "of the DOMAIN (the printed statement reads 'closed subset of the "
                      "codomain', which does not type-check for a restriction and is recorded "
                      "here but not checked)",
                  detail::violates_35);

        {
            ClaimSpec spec;
            spec.id = "C-3.4-III-bc";
            spec.kind = ClaimKind::equality_of_operators;
            spec.statement =
                "the cl* image bound holds exactly when the same assignment is continuous from "
                "the tau-star retopologized domain; instances whose tau-star family is not a "
                "topology are counted as construction failures and skipped";
            spec.universe = map_universe;
            spec.run = [id = spec.id](const ClaimContext& ctx) {
                return detail::run_map_pair_claim_counting(ctx, id, detail::violates_34_III_bc);
            };
            spec.replay = [](const WitnessBundle& bundle, AlphaMVariant variant) {
                if (bundle.spaces.size() < 2 || bundle.maps.empty()) return false;
                SpaceTables x(bundle.spaces[0].space);
                SpaceTables y(bundle.spaces[1].space);
                bool skipped = false;
                auto v = detail::violates_34_III_bc(
                    x, y, std::span<const std::uint8_t>(bundle.maps[0].image), variant, skipped);
                return !skipped && v.has_value();
            };
            out.push_back(std::move(spec));
        }

        space_claim("C-3.5-lemma", ClaimKind::implication_over_sets,
                    "the intersection of two alpha-m closed sets is alpha-m closed",
                    space_universe + ", then pairs of alpha-m closed sets (A, B) ascending",
                    [](const SpaceTables& t, AlphaMVariant v) {
                        return detail::violates_binary_alpha_m(t, v, /*check_union=*/false);
                    });
        space_claim("C-3.6-lemma-union", ClaimKind::implication_over_sets,
                    "the union of two alpha-m closed sets is alpha-m closed",
                    space_universe + ", then pairs of alpha-m closed sets (A, B) ascending",
                    [](const SpaceTables& t, AlphaMVariant v) {
                        return detail::violates_binary_alpha_m(t, v, /*check_union=*/true);
                    });
        space_claim("C-3.6-lemma-trans", ClaimKind::implication_over_sets,
                    "a set alpha-m closed in an alpha-m closed subspace is alpha-m closed in the "
                    "whole space",
                    space_universe +
                        ", then non-empty alpha-m closed carriers A ascending, then subsets B of "
                        "A ascending",
                    detail::violates_36_trans);
        space_claim("C-alpha-topology", ClaimKind::construction_validity,
                    "the alpha-open family of every space is itself a topology",
                    space_universe, detail::violates_alpha_topology);

        {
            ClaimSpec spec;
            spec.id = "C-3.6";
            spec.kind = ClaimKind::implication_over_maps;
            spec.statement =
                "a map whose restrictions to two alpha-m closed pieces covering the space are "
                "alpha-m continuous is itself alpha-m continuous";
            spec.universe =
                "ordered pairs of catalog spaces, then alpha-m closed piece pairs (A, B) with A "
                "before B and A union B the whole domain, then maps by lexicographic index";
            spec.run = [id = spec.id](const ClaimContext& ctx) {
                return detail::run_pasting_claim(ctx, id);
            };
            spec.replay = detail::pasting_witness_violates;
            out.push_back(std::move(spec));
        }

        {
            detail::TripleClaimDef def;
            def.f_bits = detail::bit_alpha_m_irresolute;
            def.g_bits = detail::bit_alpha_m_continuous;
            def.comp_bits = detail::bit_alpha_m_continuous;
            def.violated = [](std::uint8_t f, std::uint8_t g, std::uint8_t c) {
                return (f & 1) && (g & 1) && !(c & 1);
            };
            def.violation_text =
                "f is alpha-m irresolute and g is alpha-m continuous, but g after f is not "
                "alpha-m continuous";
            triple_claim("C-4.2",
                         "the composite of an alpha-m irresolute map followed by an alpha-m "
                         "continuous map is alpha-m continuous",
                         std::move(def));
        }
        {
            detail::TripleClaimDef def;
            def.f_bits = detail::bit_alpha_m_irresolute;
            def.g_bits = detail::bit_alpha_m_irresolute;
            def.comp_bits = detail::bit_alpha_m_irresolute;
            def.violated = [](std::uint8_t f, std::uint8_t g, std::uint8_t c) {
                return (f & 1) && (g & 1) && !(c & 1);
            };
            def.violation_text =
                "f and g are alpha-m irresolute, but g after f is not alpha-m irresolute";
            triple_claim("C-4.3",
                         "the composite of two alpha-m irresolute maps is alpha-m irresolute",
                         std::move(def));
        }
        {
            detail::TripleClaimDef def;
            def.f_bits = detail::bit_continuous_surjective;
            def.g_bits = detail::bit_alpha_m_closed_map;
            def.comp_bits = detail::bit_alpha_m_closed_map;
            def.f_require = 1;
            def.g_require = 0;  // g is the conclusion, iterate all of them
            def.violated = [](std::uint8_t f, std::uint8_t g, std::uint8_t c) {
                return (f & 1) && (c & 1) && !(g & 1);
            };
            def.violation_text =
                "g after f is an alpha-m closed map and f is continuous and surjective, but g is "
                "not an alpha-m closed map";
            triple_claim("C-4.4-i",
                         "if a composite is an alpha-m closed map and the first factor is "
                         "continuous and surjective, the second factor is an alpha-m closed map",
                         std::move(def));
        }
        {
            detail::TripleClaimDef def;
            def.f_bits = detail::bit_alpha_m_closed_map;
            def.g_bits = detail::bit_irresolute_injective;
            def.comp_bits = detail::bit_alpha_m_closed_map;
            def.f_require = 0;  // f is the conclusion, iterate all of them
            def.g_require = 1;
            def.violated = [](std::uint8_t f, std::uint8_t g, std::uint8_t c) {
                return (g & 1) && (c & 1) && !(f & 1);
            };
            def.violation_text =
                "g after f is an alpha-m closed map and g is irresolute and injective, but f is "
                "not an alpha-m closed map";
            triple_claim("C-4.4-ii",
                         "if a composite is an alpha-m closed map and the second factor is "
                         "irresolute and injective, the first factor is an alpha-m closed map "
                         "(irresolute read as printed: semi-closed preimages of semi-closed sets)",
                         std::move(def));
        }
        {
            detail::TripleClaimDef def;
            def.f_bits = detail::bit_alpha_m_closed_map;
            def.g_bits = detail::bit_alpha_m_irresolute_injective;
            def.comp_bits = detail::bit_alpha_m_closed_map;
            def.f_require = 0;
            def.g_require = 1;
            def.violated = [](std::uint8_t f, std::uint8_t g, std::uint8_t c) {
                return (g & 1) && (c & 1) && !(f & 1);
            };
            def.violation_text =
                "g after f is an alpha-m closed map and g is alpha-m irresolute and injective, "
                "but f is not an alpha-m closed map";
            triple_claim("C-4.4-ii-proof",
                         "if a composite is an alpha-m closed map and the second factor is "
                         "alpha-m irresolute and injective, the first factor is an alpha-m closed "
                         "map (the reading the justification of the printed statement uses)",
                         std::move(def));
        }

        {
            ClaimSpec spec;
            spec.id = "C-ex-3.3";
            spec.kind = ClaimKind::implication_over_maps;
            spec.statement =
                "on the fixed reference instance the map is alpha-m continuous but not "
                "continuous; the two witness-family readings disagree here";
            spec.universe = "the fixed reference instance only";
            spec.run = [id = spec.id](const ClaimContext& ctx) {
                return detail::run_reference_instance_claim(ctx, id);
            };
            spec.replay = detail::reference_instance_violates;
            out.push_back(std::move(spec));
        }

        // Keep the registry sorted by id so run_all order is the listing order.
        std::sort(out.begin(), out.end(),
                  [](const ClaimSpec& a, const ClaimSpec& b) { return a.id < b.id; });
        return out;
    }();
    return claims;
}

}  // namespace fintop
