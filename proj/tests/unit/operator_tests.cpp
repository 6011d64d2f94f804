#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "fintop/operators.hpp"
#include "fintop/space.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace fintop;

namespace {

/// Every 3-point space from the brute-force family scan, as SpaceTables.
const std::vector<SpaceTables>& all_three_point_tables() {
    static const std::vector<SpaceTables> tables = [] {
        std::vector<SpaceTables> out;
        for (const auto& opens : oracle::naive_topologies(3))
            out.emplace_back(make_topology(3, opens));
        return out;
    }();
    return tables;
}

}  // namespace

TEST_CASE("variant names round-trip and index stably", "[variant]") {
    CHECK(to_string(AlphaMVariant::alpha_open_witnesses) == "alpha-open");
    CHECK(to_string(AlphaMVariant::open_witnesses) == "open");
    CHECK(parse_variant("alpha-open") == AlphaMVariant::alpha_open_witnesses);
    CHECK(parse_variant("open") == AlphaMVariant::open_witnesses);
    CHECK_FALSE(parse_variant("both").has_value());
    CHECK(variant_index(kBothVariants[0]) == 0);
    CHECK(variant_index(kBothVariants[1]) == 1);
    CHECK(kDefaultVariant == AlphaMVariant::alpha_open_witnesses);
}

TEST_CASE("the two witness families genuinely classify differently", "[variant]") {
    const SpaceTables t(fixture::point_line());
    CHECK(t.alpha_m_members(AlphaMVariant::alpha_open_witnesses) ==
          std::vector<std::uint16_t>{0, 2, 4, 6, 7});
    CHECK(t.alpha_m_members(AlphaMVariant::open_witnesses) ==
          std::vector<std::uint16_t>{0, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("alpha-m closedness matches the first-principles definition", "[variant]") {
    for (const auto& t : all_three_point_tables())
        for (AlphaMVariant v : kBothVariants)
            for (std::uint32_t a = 0; a <= t.full; ++a)
                CHECK(t.is_alpha_m_closed(a, v) == oracle::alpha_m_closed_def(t, a, v));
}

TEST_CASE("interior and closure tables agree with the direct computation", "[operators]") {
    for (const auto& t : all_three_point_tables()) {
        for (std::uint32_t a = 0; a <= t.full; ++a) {
            CHECK(t.interior_of[a] == interior_bits(t.space, a));
            CHECK(t.closure_of[a] == closure_bits(t.space, a));
        }
    }
}

TEST_CASE("open-type membership flags match their definitions", "[operators]") {
    for (const auto& t : all_three_point_tables()) {
        for (std::uint32_t a = 0; a <= t.full; ++a) {
            CHECK((t.alpha_open_of[a] != 0) == oracle::alpha_open_def(t, a));
            CHECK((t.semi_open_of[a] != 0) == oracle::semi_open_def(t, a));
            CHECK((t.pre_open_of[a] != 0) == oracle::pre_open_def(t, a));
            CHECK((t.beta_open_of[a] != 0) == oracle::beta_open_def(t, a));
            // closed-type flags are complement duals
            const std::uint32_t ac = ~a & t.full;
            CHECK((t.alpha_closed_of[a] != 0) == oracle::alpha_open_def(t, ac));
            CHECK((t.semi_closed_of[a] != 0) == oracle::semi_open_def(t, ac));
            CHECK((t.pre_closed_of[a] != 0) == oracle::pre_open_def(t, ac));
            CHECK((t.beta_closed_of[a] != 0) == oracle::beta_open_def(t, ac));
        }
    }
}

TEST_CASE("family-based closures equal their interior/closure formulas", "[operators]") {
    for (const auto& t : all_three_point_tables()) {
        for (std::uint32_t a = 0; a <= t.full; ++a) {
            CHECK(t.alpha_closure_of[a] == oracle::alpha_closure_formula(t, a));
            CHECK(t.semi_closure_of[a] == oracle::semi_closure_formula(t, a));
            CHECK(t.pre_closure_of[a] == oracle::pre_closure_formula(t, a));
        }
    }
}

TEST_CASE("closure ladder on the one-open-point line", "[operators]") {
    const SpaceTables t(fixture::point_line());
    // {a} is dense: every generalized closure of it is the whole space.
    CHECK(t.alpha_closure_of[0b001] == 0b111);
    CHECK(t.semi_closure_of[0b001] == 0b111);
    CHECK(t.pre_closure_of[0b001] == 0b111);
    // {b} is already alpha-, semi- and pre-closed.
    CHECK(t.alpha_closure_of[0b010] == 0b010);

    CHECK(generalized_closure(t, ClosureKind::closure, SubsetMask(0b001, 3)) ==
          SubsetMask(0b111, 3));
    CHECK(generalized_closure(t, ClosureKind::closure_star, SubsetMask(0b001, 3)) ==
          SubsetMask(0b111, 3));
}

TEST_CASE("closure-star is the bare intersection of alpha-m closed supersets", "[operators]") {
    for (const auto& t : all_three_point_tables())
        for (AlphaMVariant v : kBothVariants)
            for (std::uint32_t a = 0; a <= t.full; ++a)
                CHECK(t.closure_star(a, v) == oracle::closure_star_def(t, a, v));
}

TEST_CASE("closure-star sits between the set and its closure", "[operators]") {
    for (const auto& t : all_three_point_tables()) {
        for (AlphaMVariant v : kBothVariants) {
            for (std::uint32_t a = 0; a <= t.full; ++a) {
                const std::uint32_t star = t.closure_star(a, v);
                CHECK(bits_subset(a, star));
                CHECK(bits_subset(star, t.closure_of[a]));
            }
        }
    }
}

TEST_CASE("closure-star tables on the one-open-point line", "[operators]") {
    const SpaceTables t(fixture::point_line());
    const std::vector<std::uint16_t> printed{0, 7, 2, 7, 4, 7, 6, 7};
    for (std::uint32_t a = 0; a < 8; ++a) {
        CHECK(t.closure_star(a, AlphaMVariant::alpha_open_witnesses) == printed[a]);
        // Under open witnesses every subset here is its own closure-star.
        CHECK(t.closure_star(a, AlphaMVariant::open_witnesses) == a);
    }
}

TEST_CASE("derived families carry explicit axiom checks", "[operators]") {
    const SpaceTables line(fixture::point_line());
    const auto alpha = derived_family(line, FamilyKind::alpha_open);
    CHECK(alpha.members == std::vector<std::uint16_t>{0, 1, 3, 5, 7});
    CHECK_FALSE(alpha.topology_failure.has_value());
    CHECK(alpha.contains(0b101));
    CHECK_FALSE(alpha.contains(0b110));

    const auto semi = derived_family(line, FamilyKind::semi_open);
    CHECK(semi.members == alpha.members);  // they coincide on this space

    // The alpha-m closed family of the two-open-point space is not a
    // topology: {a} and {b} are members but their union is not.
    const SpaceTables forked(fixture::two_open_points());
    const auto am = derived_family(forked, FamilyKind::alpha_m_closed,
                                   AlphaMVariant::alpha_open_witnesses);
    REQUIRE(am.variant.has_value());
    CHECK(am.contains(0b001));
    CHECK(am.contains(0b010));
    CHECK_FALSE(am.contains(0b011));
    REQUIRE(am.topology_failure.has_value());
    CHECK(am.topology_failure->code == TopologyError::Code::not_closed_under_union);
}

TEST_CASE("tau-star succeeds on the line and keeps both variants apart", "[operators]") {
    const SpaceTables t(fixture::point_line());

    const auto printed = tau_star(t, AlphaMVariant::alpha_open_witnesses);
    REQUIRE(printed.is_topology());
    CHECK(printed.family == std::vector<std::uint16_t>{0, 1, 3, 5, 7});
    CHECK(printed.space->opens() == printed.family);
    CHECK_FALSE(printed.failure.has_value());

    const auto open_variant = tau_star(t, AlphaMVariant::open_witnesses);
    REQUIRE(open_variant.is_topology());
    CHECK(open_variant.space.value() == discrete_space(3));
}

TEST_CASE("tau-star failure is reported as data", "[operators]") {
    const auto out = tau_star(fixture::two_open_points(), AlphaMVariant::alpha_open_witnesses);
    CHECK_FALSE(out.is_topology());
    REQUIRE(out.failure.has_value());
    CHECK(out.failure->code == TopologyError::Code::not_closed_under_intersection);
    CHECK_FALSE(out.family.empty());  // the family itself is still reported
}

TEST_CASE("tau-star failure census over all 3-point spaces", "[operators]") {
    int printed_failures = 0;
    int open_failures = 0;
    for (const auto& t : all_three_point_tables()) {
        if (!tau_star(t, AlphaMVariant::alpha_open_witnesses).is_topology()) ++printed_failures;
        if (!tau_star(t, AlphaMVariant::open_witnesses).is_topology()) ++open_failures;
    }
    CHECK(printed_failures == 3);
    CHECK(open_failures == 3);
}
