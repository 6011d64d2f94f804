#pragma once

// Pairwise implication survey over the set classes: for every ordered pair
// (P, Q), either P implies Q on every subset of every catalog space within
// the budget, or the minimal counterexample is recorded. Minimal means first
// in (ground size, catalog index, subset mask) order, so the matrix is a
// pure function of (max_n, variant).

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fintop/claims.hpp"
#include "fintop/classifiers.hpp"
#include "fintop/space.hpp"
#include "fintop/variant.hpp"

namespace fintop {

struct ImplicationWitness {
    FiniteSpace space;
    SubsetMask subset;
};

struct ImplicationCell {
    bool holds = true;
    std::optional<ImplicationWitness> witness;  ///< set iff !holds; minimal in scan order
};

struct ImplicationMatrix {
    AlphaMVariant variant = kDefaultVariant;
    int max_n = 3;
    std::array<std::array<ImplicationCell, kSetClassCount>, kSetClassCount> cells;

    const ImplicationCell& cell(SetClass p, SetClass q) const {
        return cells[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
    }
    bool holds(SetClass p, SetClass q) const { return cell(p, q).holds; }
};

constexpr int kMaxImplicationGroundSize = 5;

inline ImplicationMatrix compute_implication_matrix(CatalogStore& store, int max_n,
                                                    AlphaMVariant variant) {
    if (max_n < 1 || max_n > kMaxImplicationGroundSize)
        throw std::invalid_argument("implication matrix supports 1..5 points");
    ImplicationMatrix m;
    m.variant = variant;
    m.max_n = max_n;
    for (int n = 1; n <= max_n; ++n) {
        auto catalog = store.labeled(n);
        for (std::size_t idx = 0; idx < catalog->tables.size(); ++idx) {
            const SpaceTables& t = catalog->tables[idx];
            for (std::uint32_t a = 0; a <= t.full; ++a) {
                const std::uint32_t sat = classify_subset(t, SubsetMask(a, n), variant).satisfied;
                for (int p = 0; p < kSetClassCount; ++p) {
                    if (!((sat >> p) & 1u)) continue;
                    for (int q = 0; q < kSetClassCount; ++q) {
                        if ((sat >> q) & 1u) continue;
                        ImplicationCell& cell = m.cells[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
                        if (!cell.holds) continue;
                        cell.holds = false;
                        cell.witness = ImplicationWitness{
                            catalog->catalog.entries[idx], SubsetMask(a, n)};
                    }
                }
            }
        }
    }
    return m;
}

/// True when the stored witness still satisfies P and fails Q.
inline bool implication_witness_violates(SetClass p, SetClass q, const ImplicationWitness& w,
                                         AlphaMVariant variant) {
    SpaceTables t(w.space);
    return subset_has_class(t, w.subset.bits(), p, variant) &&
           !subset_has_class(t, w.subset.bits(), q, variant);
}

// ---- condensed transitive reduction -----------------------------------------

/// One node of the reduced graph: classes that imply each other within the
/// surveyed universe, listed in enum order.
struct ImplicationGroup {
    std::vector<SetClass> members;
};

/// Condensation of the implication preorder with a transitive reduction of
/// the resulting order: the Hasse diagram of the class hierarchy at this
/// budget. Groups are ordered by their smallest member; edges are sorted.
struct ImplicationGraph {
    std::vector<ImplicationGroup> groups;
    std::vector<std::pair<int, int>> edges;  ///< group index pairs, implier -> implied

    int group_of(SetClass c) const {
        for (std::size_t g = 0; g < groups.size(); ++g)
            for (SetClass m : groups[g].members)
                if (m == c) return static_cast<int>(g);
        return -1;
    }
};

inline ImplicationGraph condensed_reduction(const ImplicationMatrix& m) {
    // The implication relation is reflexive and transitive by construction
    // (it quantifies over one fixed universe), so condensation needs no
    // closure pass.
    ImplicationGraph out;
    std::array<int, kSetClassCount> group_of;
    group_of.fill(-1);
    for (int p = 0; p < kSetClassCount; ++p) {
        if (group_of[static_cast<std::size_t>(p)] >= 0) continue;
        const int id = static_cast<int>(out.groups.size());
        ImplicationGroup group;
        for (int q = p; q < kSetClassCount; ++q) {
            if (group_of[static_cast<std::size_t>(q)] >= 0) continue;
            if (m.holds(static_cast<SetClass>(p), static_cast<SetClass>(q)) &&
                m.holds(static_cast<SetClass>(q), static_cast<SetClass>(p))) {
                group_of[static_cast<std::size_t>(q)] = id;
                group.members.push_back(static_cast<SetClass>(q));
            }
        }
        out.groups.push_back(std::move(group));
    }

    const auto rep = [&](int g) { return out.groups[static_cast<std::size_t>(g)].members.front(); };
    const int count = static_cast<int>(out.groups.size());
    auto holds_between = [&](int a, int b) { return m.holds(rep(a), rep(b)); };
    for (int a = 0; a < count; ++a) {
        for (int b = 0; b < count; ++b) {
            if (a == b || !holds_between(a, b)) continue;
            bool covered = false;
            for (int c = 0; c < count && !covered; ++c) {
                if (c == a || c == b) continue;
                if (holds_between(a, c) && holds_between(c, b)) covered = true;
            }
            if (!covered) out.edges.emplace_back(a, b);
        }
    }
    return out;
}

}  // namespace fintop
