#pragma once

// The built-in claim registry: a catalog of implication, equivalence and
// composition statements about the generalized classes, each checked
// exhaustively over every instance inside a search budget.
//
// Verdicts are deterministic: instances are ordered (domain n, domain
// catalog index, codomain n, codomain catalog index, map index, then any
// claim-specific inner components, each ascending) and a counterexample is
// always the first violation in that order, independent of worker count.
// Every counterexample carries a witness bundle sufficient to replay it.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fintop/classifiers.hpp"
#include "fintop/enumeration.hpp"
#include "fintop/errors.hpp"
#include "fintop/map.hpp"
#include "fintop/names.hpp"
#include "fintop/operators.hpp"
#include "fintop/space.hpp"
#include "fintop/sweep.hpp"
#include "fintop/variant.hpp"

namespace fintop {

struct SearchBudget {
    int max_domain_n = 3;
    int max_codomain_n = 3;
    /// Cap on catalog entries used per ground-set size (first K in catalog
    /// order); unset means all of them.
    std::optional<std::uint64_t> max_witness_spaces;
    std::optional<std::chrono::milliseconds> time_limit;
};

/// Coordinates of a space inside the labeled catalogs: ground size and
/// catalog index.
struct SpaceRef {
    int n = 0;
    int index = 0;
};

struct AnalyzedCatalog {
    TopologyCatalog catalog;
    std::vector<SpaceTables> tables;
};

/// Memoized labeled catalogs with their per-space tables. Reads are safe
/// under concurrent access; population is idempotent.
class CatalogStore {
public:
    explicit CatalogStore(const TopologyCache* cache = nullptr, unsigned enum_workers = 1)
        : cache_(cache), enum_workers_(enum_workers) {}

    std::shared_ptr<const AnalyzedCatalog> labeled(int n) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = built_.find(n);
            if (it != built_.end()) return it->second;
        }
        auto built = std::make_shared<AnalyzedCatalog>();
        EnumerationOptions options;
        options.workers = enum_workers_;
        options.cache = cache_;
        built->catalog = enumerate_topologies(n, CatalogMode::labeled, options);
        built->tables.reserve(built->catalog.entries.size());
        for (const FiniteSpace& s : built->catalog.entries) built->tables.emplace_back(s);
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, inserted] = built_.emplace(n, std::move(built));
        return it->second;
    }

private:
    std::mutex mu_;
    std::map<int, std::shared_ptr<const AnalyzedCatalog>> built_;
    const TopologyCache* cache_;
    unsigned enum_workers_;
};

// ---- witnesses -------------------------------------------------------------

struct WitnessSpace {
    FiniteSpace space;
    std::string role;
};

struct WitnessMap {
    int domain_space = 0;  ///< index into WitnessBundle::spaces
    int codomain_space = 0;
    std::vector<std::uint8_t> image;
    std::string role;
};

struct WitnessSubset {
    int space = 0;  ///< index into WitnessBundle::spaces
    SubsetMask subset;
    std::string role;
};

/// Everything needed to replay one violating instance.
struct WitnessBundle {
    std::vector<WitnessSpace> spaces;
    std::vector<WitnessMap> maps;
    std::vector<WitnessSubset> subsets;
    std::string detail;
};

enum class ClaimOutcome { verified_up_to, counterexample, budget_exceeded };

inline std::string to_string(ClaimOutcome o) {
    switch (o) {
        case ClaimOutcome::verified_up_to: return "verified-up-to";
        case ClaimOutcome::counterexample: return "counterexample";
        case ClaimOutcome::budget_exceeded: return "budget-exceeded";
    }
    return "?";
}

struct ClaimVerdict {
    std::string claim_id;
    AlphaMVariant variant = kDefaultVariant;
    SearchBudget budget;
    ClaimOutcome outcome = ClaimOutcome::verified_up_to;
    std::optional<WitnessBundle> witness;
    /// Instances skipped because a required construction (tau-star) is not a
    /// topology there. Informational, never a violation.
    std::uint64_t construction_failures = 0;
};

enum class ClaimKind {
    implication_over_sets,
    implication_over_maps,
    equality_of_operators,
    construction_validity,
    composition_law,
};

inline std::string to_string(ClaimKind k) {
    switch (k) {
        case ClaimKind::implication_over_sets: return "implication-over-sets";
        case ClaimKind::implication_over_maps: return "implication-over-maps";
        case ClaimKind::equality_of_operators: return "equality-of-operators";
        case ClaimKind::construction_validity: return "construction-validity";
        case ClaimKind::composition_law: return "composition-law";
    }
    return "?";
}

struct ClaimContext {
    SearchBudget budget;
    AlphaMVariant variant = kDefaultVariant;
    unsigned workers = 1;
    CatalogStore* store = nullptr;
    SweepDeadline deadline;
};

struct ClaimSpec {
    std::string id;
    ClaimKind kind;
    std::string statement;
    std::string universe;
    /// A violation here is an implementation bug, not a refuted statement;
    /// the CLI exits non-zero on it.
    bool fatal_on_violation = false;
    std::function<ClaimVerdict(const ClaimContext&)> run;
    /// Re-evaluates the claim's predicate on a stored witness; true means
    /// the witness still violates.
    std::function<bool(const WitnessBundle&, AlphaMVariant)> replay;
};

// ---- universe assembly ------------------------------------------------------

namespace detail {

struct Universe {
    std::vector<std::shared_ptr<const AnalyzedCatalog>> catalogs;  ///< index by n
    std::vector<SpaceRef> refs;                                    ///< (n asc, index asc)

    const SpaceTables& tables(SpaceRef r) const {
        return catalogs[static_cast<std::size_t>(r.n)]->tables[static_cast<std::size_t>(r.index)];
    }
};

inline Universe universe_within(CatalogStore& store, int max_n,
                                const std::optional<std::uint64_t>& cap) {
    Universe u;
    u.catalogs.resize(static_cast<std::size_t>(max_n) + 1);
    for (int n = 1; n <= max_n; ++n) {
        u.catalogs[static_cast<std::size_t>(n)] = store.labeled(n);
        std::size_t count = u.catalogs[static_cast<std::size_t>(n)]->catalog.entries.size();
        if (cap) count = std::min<std::size_t>(count, static_cast<std::size_t>(*cap));
        for (std::size_t i = 0; i < count; ++i) u.refs.push_back(SpaceRef{n, static_cast<int>(i)});
    }
    return u;
}

inline WitnessSpace witness_space(const Universe& u, SpaceRef r, std::string role) {
    return WitnessSpace{u.catalogs[static_cast<std::size_t>(r.n)]->catalog.entries[static_cast<std::size_t>(r.index)],
                        std::move(role)};
}

/// Rebuild tables for the spaces of a stored witness. Used by replay paths.
inline std::vector<SpaceTables> witness_tables(const WitnessBundle& bundle) {
    std::vector<SpaceTables> out;
    out.reserve(bundle.spaces.size());
    for (const WitnessSpace& ws : bundle.spaces) out.emplace_back(ws.space);
    return out;
}

inline std::vector<std::uint8_t> restrict_image(std::span<const std::uint8_t> image,
                                                const Subspace& sub) {
    std::vector<std::uint8_t> out;
    out.reserve(sub.parent_point.size());
    for (std::uint8_t p : sub.parent_point) out.push_back(image[p]);
    return out;
}

// ---- drivers ----------------------------------------------------------------

/// Violation detail for one (domain, codomain, map) instance: human-readable
/// text plus any subsets worth embedding (space 0 = domain, 1 = codomain).
struct MapViolation {
    std::string detail;
    std::vector<WitnessSubset> subsets;
};

using MapPredicate = std::function<std::optional<MapViolation>(
    const SpaceTables&, const SpaceTables&, std::span<const std::uint8_t>, AlphaMVariant)>;

/// Sweep all (domain, codomain, map) instances. Chunk = ordered space pair;
/// the map index is the in-chunk order.
inline ClaimVerdict run_map_pair_claim(const ClaimContext& ctx, const std::string& id,
                                       const MapPredicate& violates) {
    ClaimVerdict verdict;
    verdict.claim_id = id;
    verdict.variant = ctx.variant;
    verdict.budget = ctx.budget;

    Universe domain_u = universe_within(*ctx.store, ctx.budget.max_domain_n, ctx.budget.max_witness_spaces);
    Universe codomain_u = universe_within(*ctx.store, ctx.budget.max_codomain_n, ctx.budget.max_witness_spaces);
    const std::uint64_t pair_count =
        static_cast<std::uint64_t>(domain_u.refs.size()) * codomain_u.refs.size();

    auto scan = [&](std::uint64_t chunk) -> std::optional<WitnessBundle> {
        const SpaceRef dr = domain_u.refs[static_cast<std::size_t>(chunk / codomain_u.refs.size())];
        const SpaceRef cr = codomain_u.refs[static_cast<std::size_t>(chunk % codomain_u.refs.size())];
        const SpaceTables& x = domain_u.tables(dr);
        const SpaceTables& y = codomain_u.tables(cr);
        std::optional<WitnessBundle> found;
        for_each_map_image(x.n, y.n, [&](std::span<const std::uint8_t> image) {
            if (found) return;
            if (auto v = violates(x, y, image, ctx.variant)) {
                WitnessBundle bundle;
                bundle.spaces.push_back(witness_space(domain_u, dr, "domain"));
                bundle.spaces.push_back(witness_space(codomain_u, cr, "codomain"));
                bundle.maps.push_back(WitnessMap{0, 1, {image.begin(), image.end()}, "f"});
                bundle.subsets = std::move(v->subsets);
                bundle.detail = std::move(v->detail);
                found = std::move(bundle);
            }
        });
        return found;
    };

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

inline std::function<bool(const WitnessBundle&, AlphaMVariant)> map_pair_replay(
    MapPredicate violates) {
    return [violates = std::move(violates)](const WitnessBundle& bundle, AlphaMVariant variant) {
        if (bundle.spaces.size() < 2 || bundle.maps.empty()) return false;
        SpaceTables x(bundle.spaces[0].space);
        SpaceTables y(bundle.spaces[1].space);
        return violates(x, y, std::span<const std::uint8_t>(bundle.maps[0].image), variant).has_value();
    };
}

/// Like run_map_pair_claim but visits every chunk and aggregates a skip
/// counter (instances whose required construction failed).
using MapPredicateWithSkips = std::function<std::optional<MapViolation>(
    const SpaceTables&, const SpaceTables&, std::span<const std::uint8_t>, AlphaMVariant,
    bool& skipped)>;

inline ClaimVerdict run_map_pair_claim_counting(const ClaimContext& ctx, const std::string& id,
                                                const MapPredicateWithSkips& violates) {
    ClaimVerdict verdict;
    verdict.claim_id = id;
    verdict.variant = ctx.variant;
    verdict.budget = ctx.budget;

    Universe domain_u = universe_within(*ctx.store, ctx.budget.max_domain_n, ctx.budget.max_witness_spaces);
    Universe codomain_u = universe_within(*ctx.store, ctx.budget.max_codomain_n, ctx.budget.max_witness_spaces);
    const std::uint64_t pair_count =
        static_cast<std::uint64_t>(domain_u.refs.size()) * codomain_u.refs.size();

    auto scan = [&](std::uint64_t chunk, std::uint64_t& stat) -> std::optional<WitnessBundle> {
        const SpaceRef dr = domain_u.refs[static_cast<std::size_t>(chunk / codomain_u.refs.size())];
        const SpaceRef cr = codomain_u.refs[static_cast<std::size_t>(chunk % codomain_u.refs.size())];
        const SpaceTables& x = domain_u.tables(dr);
        const SpaceTables& y = codomain_u.tables(cr);
        std::optional<WitnessBundle> found;
        for_each_map_image(x.n, y.n, [&](std::span<const std::uint8_t> image) {
            bool skipped = false;
            auto v = found ? std::nullopt : violates(x, y, image, ctx.variant, skipped);
            if (skipped) ++stat;
            if (v && !found) {
                WitnessBundle bundle;
                bundle.spaces.push_back(witness_space(domain_u, dr, "domain"));
                bundle.spaces.push_back(witness_space(codomain_u, cr, "codomain"));
                bundle.maps.push_back(WitnessMap{0, 1, {image.begin(), image.end()}, "f"});
                bundle.subsets = std::move(v->subsets);
                bundle.detail = std::move(v->detail);
                found = std::move(bundle);
            }
        });
        return found;
    };

    AccumulateOutcome<WitnessBundle> outcome =
        sweep_accumulate<WitnessBundle>(pair_count, ctx.workers, ctx.deadline, scan);
    if (outcome.time_exceeded) {
        verdict.outcome = ClaimOutcome::budget_exceeded;
        return verdict;
    }
    verdict.construction_failures = outcome.stat_total;
    if (outcome.first) {
        verdict.outcome = ClaimOutcome::counterexample;
        verdict.witness = std::move(outcome.first->second);
    }
    return verdict;
}

/// Per-space claims (one chunk per catalog space).
struct SpaceViolation {
    std::string detail;
    std::vector<WitnessSubset> subsets;  ///< space index 0
};

using SpacePredicate =
    std::function<std::optional<SpaceViolation>(const SpaceTables&, AlphaMVariant)>;

inline ClaimVerdict run_space_claim(const ClaimContext& ctx, const std::string& id,
                                    const SpacePredicate& violates) {
    ClaimVerdict verdict;
    verdict.claim_id = id;
    verdict.variant = ctx.variant;
    verdict.budget = ctx.budget;

    Universe u = universe_within(*ctx.store, ctx.budget.max_domain_n, ctx.budget.max_witness_spaces);
    auto scan = [&](std::uint64_t chunk) -> std::optional<WitnessBundle> {
        const SpaceRef r = u.refs[static_cast<std::size_t>(chunk)];
        if (auto v = violates(u.tables(r), ctx.variant)) {
            WitnessBundle bundle;
            bundle.spaces.push_back(witness_space(u, r, "space"));
            bundle.subsets = std::move(v->subsets);
            bundle.detail = std::move(v->detail);
            return bundle;
        }
        return std::nullopt;
    };

    SweepOutcome<WitnessBundle> outcome =
        sweep_first_hit<WitnessBundle>(u.refs.size(), ctx.workers, ctx.deadline, scan);
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

inline std::function<bool(const WitnessBundle&, AlphaMVariant)> space_replay(
    SpacePredicate violates) {
    return [violates = std::move(violates)](const WitnessBundle& bundle, AlphaMVariant variant) {
        if (bundle.spaces.empty()) return false;
        SpaceTables t(bundle.spaces[0].space);
        return violates(t, variant).has_value();
    };
}

}  // namespace detail

// ---- the reference divergence instance --------------------------------------

/// The fixed three-point / two-point instance on which the two witness-family
/// readings of alpha-m closedness disagree: domain opens {{}, {a}, X},
/// codomain opens {{}, {p}, Y}, f(a)=q, f(b)=p, f(c)=q.
struct ReferenceInstance {
    FiniteSpace domain;
    FiniteSpace codomain;
    std::vector<std::uint8_t> image;
};

inline const ReferenceInstance& variant_divergence_instance() {
    static const ReferenceInstance instance{
        make_topology(3, {0x0, 0x1, 0x7}),
        make_topology(2, {0x0, 0x1, 0x3}),
        {1, 0, 1},
    };
    return instance;
}

// ---- registry ---------------------------------------------------------------

inline const std::vector<ClaimSpec>& registered_claims();

inline const ClaimSpec& find_claim(const std::string& id) {
    for (const ClaimSpec& c : registered_claims())
        if (c.id == id) return c;
    throw UnknownClaimError(id);
}

struct RunOptions {
    unsigned workers = 1;
    CatalogStore* store = nullptr;
};

inline ClaimVerdict run_claim(const std::string& id, const SearchBudget& budget,
                              AlphaMVariant variant, const RunOptions& options = {}) {
    const ClaimSpec& spec = find_claim(id);
    CatalogStore local;
    ClaimContext ctx;
    ctx.budget = budget;
    ctx.variant = variant;
    ctx.workers = options.workers;
    ctx.store = options.store ? options.store : &local;
    if (budget.time_limit) ctx.deadline = std::chrono::steady_clock::now() + *budget.time_limit;
    return spec.run(ctx);
}

inline std::vector<ClaimVerdict> run_all_claims(const SearchBudget& budget, AlphaMVariant variant,
                                                const RunOptions& options = {}) {
    CatalogStore local;
    RunOptions effective = options;
    if (!effective.store) effective.store = &local;
    std::vector<ClaimVerdict> out;
    for (const ClaimSpec& spec : registered_claims())
        out.push_back(run_claim(spec.id, budget, variant, effective));
    return out;
}

/// Re-evaluate a verdict's stored witness; true means it still violates.
inline bool replay_witness(const ClaimVerdict& verdict) {
    if (!verdict.witness) return false;
    return find_claim(verdict.claim_id).replay(*verdict.witness, verdict.variant);
}

// ---- claim definitions ------------------------------------------------------

namespace detail {

inline std::string role_subset(const SpaceTables& t, std::uint32_t mask, int role) {
    return format_subset(SubsetMask(mask, t.n), default_names(t.n, role).names);
}

/// C-3.2 forward: continuous implies alpha-m continuous.
inline std::optional<MapViolation> violates_32_fwd(const SpaceTables& x, const SpaceTables& y,
                                                   std::span<const std::uint8_t> image,
                                                   AlphaMVariant variant) {
    if (!map_has_class(x, y, image, MapClass::continuous, variant)) return std::nullopt;
    auto v = alpha_m_continuity_violation(x, y, image, variant);
    if (!v) return std::nullopt;
    MapViolation out;
    out.detail = "map is continuous but not alpha-m continuous: preimage of closed " +
                 role_subset(y, v->closed_set.bits(), 1) + " is " +
                 role_subset(x, v->preimage.bits(), 0) + ", not alpha-m closed (witness " +
                 role_subset(x, v->witness.bits(), 0) + ")";
    out.subsets.push_back(WitnessSubset{1, v->closed_set, "closed set"});
    out.subsets.push_back(WitnessSubset{0, v->preimage, "preimage"});
    out.subsets.push_back(WitnessSubset{0, v->witness, "witness superset"});
    return out;
}

/// C-3.2 converse: alpha-m continuous implies continuous (expected to fail).
inline std::optional<MapViolation> violates_32_conv(const SpaceTables& x, const SpaceTables& y,
                                                    std::span<const std::uint8_t> image,
                                                    AlphaMVariant variant) {
    if (!map_has_class(x, y, image, MapClass::alpha_m_continuous, variant)) return std::nullopt;
    for (std::uint16_t v : y.space.opens()) {
        const std::uint32_t pre = preimage_bits(image, v);
        if (!x.is_open(pre)) {
            MapViolation out;
            out.detail = "map is alpha-m continuous but the preimage of open " +
                         role_subset(y, v, 1) + " is " + role_subset(x, pre, 0) + ", not open";
            out.subsets.push_back(WitnessSubset{1, SubsetMask(v, y.n), "open set"});
            out.subsets.push_back(WitnessSubset{0, SubsetMask(pre, x.n), "preimage"});
            return out;
        }
    }
    return std::nullopt;
}

/// C-3.4 (I): the closed-preimage and open-preimage formulations agree.
inline std::optional<MapViolation> violates_34_I(const SpaceTables& x, const SpaceTables& y,
                                                 std::span<const std::uint8_t> image,
                                                 AlphaMVariant variant) {
    if (open_closed_formulation_agrees(x, y, image, variant)) return std::nullopt;
    MapViolation out;
    out.detail = "closed-preimage and open-preimage formulations of alpha-m continuity disagree";
    return out;
}

inline bool cl_star_image_bound_holds(const SpaceTables& x, const SpaceTables& y,
                                      std::span<const std::uint8_t> image, AlphaMVariant variant,
                                      std::uint32_t& bad_subset) {
    for (std::uint32_t a = 0; a <= x.full; ++a) {
        const std::uint32_t lhs = image_bits(image, x.closure_star(a, variant));
        const std::uint32_t rhs = y.closure_of[image_bits(image, a)];
        if (!bits_subset(lhs, rhs)) {
            bad_subset = a;
            return false;
        }
    }
    return true;
}

/// C-3.4 (II): alpha-m continuity bounds images of cl* by closures of images.
inline std::optional<MapViolation> violates_34_II(const SpaceTables& x, const SpaceTables& y,
                                                  std::span<const std::uint8_t> image,
                                                  AlphaMVariant variant) {
    if (!map_has_class(x, y, image, MapClass::alpha_m_continuous, variant)) return std::nullopt;
    std::uint32_t bad = 0;
    if (cl_star_image_bound_holds(x, y, image, variant, bad)) return std::nullopt;
    MapViolation out;
    out.detail = "map is alpha-m continuous but f(cl*(" + role_subset(x, bad, 0) +
                 ")) is not inside cl(f(" + role_subset(x, bad, 0) + "))";
    out.subsets.push_back(WitnessSubset{0, SubsetMask(bad, x.n), "subset A"});
    return out;
}

/// Condition (a) of C-3.4 (III): pointwise alpha-m neighbourhood condition.
inline bool pointwise_alpha_m_condition(const SpaceTables& x, const SpaceTables& y,
                                        std::span<const std::uint8_t> image, AlphaMVariant variant) {
    const auto& am_closed = x.alpha_m_closed_of[variant_index(variant)];
    for (int p = 0; p < x.n; ++p) {
        for (std::uint16_t v : y.space.opens()) {
            if (!((v >> image[static_cast<std::size_t>(p)]) & 1u)) continue;
            bool found = false;
            for (std::uint32_t u = 0; u <= x.full && !found; ++u) {
                if (!((u >> p) & 1u)) continue;
                if (!am_closed[~u & x.full]) continue;  // U must be alpha-m open
                if (bits_subset(image_bits(image, u), v)) found = true;
            }
            if (!found) return false;
        }
    }
    return true;
}

/// C-3.4 (III) (a) vs (b).
inline std::optional<MapViolation> violates_34_III_ab(const SpaceTables& x, const SpaceTables& y,
                                                      std::span<const std::uint8_t> image,
                                                      AlphaMVariant variant) {
    const bool a = pointwise_alpha_m_condition(x, y, image, variant);
    std::uint32_t bad = 0;
    const bool b = cl_star_image_bound_holds(x, y, image, variant, bad);
    if (a == b) return std::nullopt;
    MapViolation out;
    out.detail = std::string("pointwise alpha-m neighbourhood condition is ") +
                 (a ? "satisfied" : "violated") + " but the cl* image bound is " +
                 (b ? "satisfied" : "violated");
    return out;
}

/// C-3.4 (III) (b) vs (c); instances without a valid tau-star are skipped.
inline std::optional<MapViolation> violates_34_III_bc(const SpaceTables& x, const SpaceTables& y,
                                                      std::span<const std::uint8_t> image,
                                                      AlphaMVariant variant, bool& skipped) {
    TauStarOutcome ts = tau_star(x, variant);
    if (!ts.is_topology()) {
        skipped = true;
        return std::nullopt;
    }
    std::uint32_t bad = 0;
    const bool b = cl_star_image_bound_holds(x, y, image, variant, bad);
    bool c = true;
    for (std::uint16_t v : y.space.opens())
        if (!ts.space->is_open_bits(preimage_bits(image, v))) {
            c = false;
            break;
        }
    if (b == c) return std::nullopt;
    MapViolation out;
    out.detail = std::string("cl* image bound is ") + (b ? "satisfied" : "violated") +
                 " but the map from the tau-star retopologized domain is " +
                 (c ? "continuous" : "not continuous");
    return out;
}

}  // namespace detail

namespace detail {

/// C-3.5: restrictions of alpha-m continuous maps to non-empty closed
/// subsets of the domain stay alpha-m continuous.
inline std::optional<MapViolation> violates_35_for_carrier(
    const SpaceTables& x, const SpaceTables& y, std::span<const std::uint8_t> image,
    AlphaMVariant variant, std::uint32_t h) {
    const Subspace sub = subspace(x.space, SubsetMask(h, x.n));
    SpaceTables sub_tables(sub.space);
    const std::vector<std::uint8_t> rimage = restrict_image(image, sub);
    auto v = alpha_m_continuity_violation(sub_tables, y, rimage, variant);
    if (!v) return std::nullopt;
    MapViolation out;
    out.detail = "restriction to the closed carrier " + role_subset(x, h, 0) +
                 " is not alpha-m continuous: preimage of closed " +
                 role_subset(y, v->closed_set.bits(), 1) + " fails inside the subspace";
    out.subsets.push_back(WitnessSubset{0, SubsetMask(h, x.n), "carrier H"});
    out.subsets.push_back(WitnessSubset{1, v->closed_set, "closed set"});
    return out;
}

inline std::optional<MapViolation> violates_35(const SpaceTables& x, const SpaceTables& y,
                                               std::span<const std::uint8_t> image,
                                               AlphaMVariant variant) {
    if (!map_has_class(x, y, image, MapClass::alpha_m_continuous, variant)) return std::nullopt;
    for (std::uint16_t h : x.closed_sets) {
        if (h == 0) continue;
        if (auto v = violates_35_for_carrier(x, y, image, variant, h)) return v;
    }
    return std::nullopt;
}

/// Set-pair claims over one space: iterate alpha-m closed pairs (A <= B).
inline std::optional<SpaceViolation> violates_binary_alpha_m(
    const SpaceTables& t, AlphaMVariant variant, bool check_union) {
    const auto& members = t.alpha_m_members(variant);
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i; j < members.size(); ++j) {
            const std::uint32_t a = members[i], b = members[j];
            const std::uint32_t combined = check_union ? (a | b) : (a & b);
            if (!t.is_alpha_m_closed(combined, variant)) {
                SpaceViolation out;
                out.detail = std::string(check_union ? "union " : "intersection ") + "of alpha-m closed " +
                             role_subset(t, a, 0) + " and " + role_subset(t, b, 0) + " gives " +
                             role_subset(t, combined, 0) + ", which is not alpha-m closed";
                out.subsets.push_back(WitnessSubset{0, SubsetMask(a, t.n), "A"});
                out.subsets.push_back(WitnessSubset{0, SubsetMask(b, t.n), "B"});
                out.subsets.push_back(WitnessSubset{0, SubsetMask(combined, t.n), check_union ? "A union B" : "A intersect B"});
                return out;
            }
        }
    }
    return std::nullopt;
}

/// C-3.6 transitivity lemma: B alpha-m closed in the subspace A, A alpha-m
/// closed in X, B <= A, then B alpha-m closed in X.
inline std::optional<SpaceViolation> violates_36_trans(const SpaceTables& t, AlphaMVariant variant) {
    for (std::uint16_t a : t.alpha_m_members(variant)) {
        if (a == 0) continue;
        const Subspace sub = subspace(t.space, SubsetMask(a, t.n));
        SpaceTables sub_tables(sub.space);
        // B runs over subsets of A, ascending in X coordinates.
        for (std::uint32_t b = 0;; b = (b - a) & a) {
            const std::uint32_t local = compress_bits(b, a);
            if (sub_tables.is_alpha_m_closed(local, variant) && !t.is_alpha_m_closed(b, variant)) {
                SpaceViolation out;
                out.detail = role_subset(t, b, 0) + " is alpha-m closed inside the subspace " +
                             role_subset(t, a, 0) + " and the subspace carrier is alpha-m closed, "
                             "but the set is not alpha-m closed in the whole space";
                out.subsets.push_back(WitnessSubset{0, SubsetMask(a, t.n), "carrier A"});
                out.subsets.push_back(WitnessSubset{0, SubsetMask(b, t.n), "B"});
                return out;
            }
            if (b == a) break;
        }
    }
    return std::nullopt;
}

/// C-alpha-topology: the alpha-open family satisfies the axioms.
inline std::optional<SpaceViolation> violates_alpha_topology(const SpaceTables& t, AlphaMVariant) {
    auto failure = family_topology_failure(
        t.n, std::span<const std::uint16_t>(t.alpha_open_sets));
    if (!failure) return std::nullopt;
    SpaceViolation out;
    out.detail = "alpha-open family is not a topology: " + failure->message();
    out.subsets.push_back(WitnessSubset{0, failure->first, "first"});
    out.subsets.push_back(WitnessSubset{0, failure->second, "second"});
    return out;
}

}  // namespace detail

namespace detail {

// ---- pasting claim (C-3.6) ---------------------------------------------------

struct PastingViolation {
    std::uint32_t a = 0, b = 0;
    std::vector<std::uint8_t> image;
    std::string detail;
};

/// Scan one (X, Y) chunk of the pasting claim: pieces (A, B) ascending with
/// A <= B, both alpha-m closed, covering X; then the combined map by index.
inline std::optional<PastingViolation> scan_pasting_chunk(const SpaceTables& x, const SpaceTables& y,
                                                          AlphaMVariant variant) {
    // Restriction continuity per piece is cached per (piece, map index).
    const auto& members = x.alpha_m_members(variant);
    std::vector<std::vector<std::uint8_t>> piece_ok(members.size());
    std::vector<std::optional<Subspace>> piece_sub(members.size());
    const std::uint64_t maps = map_count(x.n, y.n);
    for (std::size_t i = 0; i < members.size(); ++i) {
        piece_ok[i].assign(static_cast<std::size_t>(maps), 0);
        if (members[i] == 0) {
            // Empty piece: nothing to restrict, vacuously continuous.
            std::fill(piece_ok[i].begin(), piece_ok[i].end(), 1);
            continue;
        }
        piece_sub[i] = subspace(x.space, SubsetMask(members[i], x.n));
        SpaceTables sub_tables(piece_sub[i]->space);
        std::uint64_t index = 0;
        for_each_map_image(x.n, y.n, [&](std::span<const std::uint8_t> image) {
            const std::vector<std::uint8_t> rimage = restrict_image(image, *piece_sub[i]);
            piece_ok[i][index] =
                map_has_class(sub_tables, y, rimage, MapClass::alpha_m_continuous, variant) ? 1 : 0;
            ++index;
        });
    }

    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i; j < members.size(); ++j) {
            if ((members[i] | members[j]) != x.full) continue;
            std::uint64_t index = 0;
            std::optional<PastingViolation> found;
            for_each_map_image(x.n, y.n, [&](std::span<const std::uint8_t> image) {
                if (!found && piece_ok[i][index] && piece_ok[j][index] &&
                    !map_has_class(x, y, image, MapClass::alpha_m_continuous, variant)) {
                    PastingViolation v;
                    v.a = members[i];
                    v.b = members[j];
                    v.image.assign(image.begin(), image.end());
                    v.detail = "restrictions to the alpha-m closed cover pieces " +
                               role_subset(x, members[i], 0) + " and " + role_subset(x, members[j], 0) +
                               " are alpha-m continuous but the combined map is not";
                    found = std::move(v);
                }
                ++index;
            });
            if (found) return found;
        }
    }
    return std::nullopt;
}

}  // namespace detail

}  // namespace fintop

#include "fintop/claims_registry.hpp"
