#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <set>
#include <vector>

#include "fintop/classifiers.hpp"
#include "fintop/operators.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace fintop;

namespace {

std::set<SetClass> classes_of(const SpaceTables& t, std::uint32_t mask, AlphaMVariant v) {
    std::set<SetClass> out;
    const auto r = classify_subset(t, SubsetMask(mask, t.n), v);
    for (SetClass c : kAllSetClasses)
        if (r.has(c)) out.insert(c);
    return out;
}

/// Independent evaluation of the quantified closed-type classes: build the
/// witness family from the oracle definitions and test coverage directly.
bool quantified_class_oracle(const SpaceTables& t, std::uint32_t a, SetClass c) {
    std::vector<std::uint8_t> open_family(t.full + 1), alpha_family(t.full + 1), semi_family(t.full + 1);
    for (std::uint32_t u = 0; u <= t.full; ++u) {
        open_family[u] = t.is_open(u) ? 1 : 0;
        alpha_family[u] = oracle::alpha_open_def(t, u) ? 1 : 0;
        semi_family[u] = oracle::semi_open_def(t, u) ? 1 : 0;
    }
    const std::uint32_t cl = t.closure_of[a];
    const std::uint32_t acl = oracle::alpha_closure_formula(t, a);
    const std::uint32_t scl = oracle::semi_closure_formula(t, a);
    const std::uint32_t in = t.interior_of[a];
    switch (c) {
        case SetClass::g_closed: return oracle::covered_by_witnesses(t, a, cl, open_family);
        case SetClass::g_alpha_closed: return oracle::covered_by_witnesses(t, a, acl, alpha_family);
        case SetClass::wg_closed:
            return oracle::covered_by_witnesses(t, a, t.closure_of[in], open_family);
        case SetClass::wg_alpha_closed:
            return oracle::covered_by_witnesses(t, a, oracle::alpha_closure_formula(t, in),
                                                alpha_family);
        case SetClass::sg_closed: return oracle::covered_by_witnesses(t, a, scl, semi_family);
        case SetClass::alpha_g_closed: return oracle::covered_by_witnesses(t, a, acl, open_family);
        case SetClass::w_closed: return oracle::covered_by_witnesses(t, a, cl, semi_family);
        default: return false;
    }
}

}  // namespace

TEST_CASE("class and map-class names are distinct and stable", "[classifiers]") {
    std::set<std::string> set_names;
    for (SetClass c : kAllSetClasses) set_names.insert(to_string(c));
    CHECK(set_names.size() == static_cast<std::size_t>(kSetClassCount));

    std::set<std::string> map_names;
    for (MapClass c : kAllMapClasses) map_names.insert(to_string(c));
    CHECK(map_names.size() == static_cast<std::size_t>(kMapClassCount));

    CHECK(to_string(SetClass::alpha_m_closed) == "alpha-m-closed");
    CHECK(to_string(MapClass::alpha_m_irresolute) == "alpha-m-irresolute");
}

TEST_CASE("every subset of a discrete space satisfies every class", "[classifiers]") {
    const SpaceTables t(discrete_space(2));
    for (std::uint32_t a = 0; a <= t.full; ++a)
        for (AlphaMVariant v : kBothVariants)
            for (SetClass c : kAllSetClasses)
                CHECK(subset_has_class(t, a, c, v));
}

TEST_CASE("classification of {a,c} in the one-open-point line", "[classifiers]") {
    const SpaceTables t(fixture::point_line());

    const auto printed = classes_of(t, 0b101, AlphaMVariant::alpha_open_witnesses);
    CHECK(printed == std::set<SetClass>{SetClass::pre_open, SetClass::semi_open,
                                        SetClass::alpha_open, SetClass::beta_open,
                                        SetClass::g_closed, SetClass::wg_closed,
                                        SetClass::alpha_g_closed});

    // Under open witnesses the same set additionally becomes alpha-m closed:
    // its only open superset is X, which covers everything.
    auto open_classes = classes_of(t, 0b101, AlphaMVariant::open_witnesses);
    auto expected = printed;
    expected.insert(SetClass::alpha_m_closed);
    CHECK(open_classes == expected);
}

TEST_CASE("alpha-m violator pinpoints the failing witness superset", "[classifiers]") {
    const SpaceTables t(fixture::point_line());
    const auto subject = SubsetMask(0b101, 3);

    const auto printed = alpha_m_closed_violator(t, subject, AlphaMVariant::alpha_open_witnesses);
    REQUIRE(printed.has_value());
    CHECK(*printed == subject);  // {a,c} is alpha-open and int(cl({a,c})) = X
    CHECK_FALSE(
        alpha_m_closed_violator(t, subject, AlphaMVariant::open_witnesses).has_value());

    // Violators are genuine: reported witness contains the set, lies in the
    // witness family, and fails the coverage condition.
    for (AlphaMVariant v : kBothVariants) {
        for (std::uint32_t a = 0; a <= t.full; ++a) {
            const auto w = alpha_m_closed_violator(t, SubsetMask(a, t.n), v);
            CHECK(w.has_value() == !t.is_alpha_m_closed(a, v));
            if (w) {
                CHECK(bits_subset(a, w->bits()));
                CHECK_FALSE(bits_subset(t.interior_of[t.closure_of[a]], w->bits()));
                if (v == AlphaMVariant::alpha_open_witnesses)
                    CHECK(t.alpha_open_of[w->bits()] != 0);
                else
                    CHECK(t.is_open(w->bits()));
            }
        }
    }
}

TEST_CASE("quantified closed-type classes match the coverage oracle", "[classifiers]") {
    for (const auto& opens : oracle::naive_topologies(3)) {
        const SpaceTables t(make_topology(3, opens));
        for (std::uint32_t a = 0; a <= t.full; ++a) {
            for (SetClass c : {SetClass::g_closed, SetClass::g_alpha_closed, SetClass::wg_closed,
                               SetClass::wg_alpha_closed, SetClass::sg_closed,
                               SetClass::alpha_g_closed, SetClass::w_closed}) {
                CHECK(subset_has_class(t, a, c, kDefaultVariant) ==
                      quantified_class_oracle(t, a, c));
            }
        }
    }
}

TEST_CASE("identity maps satisfy every map class", "[classifiers]") {
    for (const auto& s : {fixture::point_line(), fixture::sierpinski(), discrete_space(2),
                          indiscrete_space(3), fixture::two_open_points()}) {
        const auto id = identity_map(s);
        for (AlphaMVariant v : kBothVariants) {
            const auto r = classify_map(id, v);
            for (MapClass c : kAllMapClasses) CHECK(r.has(c));
        }
    }
}

TEST_CASE("classification of the line-to-sierpinski reference map", "[classifiers]") {
    const auto f = fixture::line_to_sierpinski();

    const auto printed = classify_map(f, AlphaMVariant::alpha_open_witnesses);
    CHECK_FALSE(printed.has(MapClass::continuous));
    CHECK(printed.has(MapClass::g_continuous));
    CHECK(printed.has(MapClass::alpha_g_continuous));
    CHECK(printed.has(MapClass::wg_continuous));
    CHECK(printed.has(MapClass::closed_map));
    CHECK(printed.has(MapClass::alpha_m_closed_map));
    CHECK_FALSE(printed.has(MapClass::sg_continuous));
    CHECK_FALSE(printed.has(MapClass::w_continuous));
    CHECK_FALSE(printed.has(MapClass::irresolute));
    CHECK_FALSE(printed.has(MapClass::alpha_m_continuous));
    CHECK_FALSE(printed.has(MapClass::alpha_m_irresolute));

    const auto open_variant = classify_map(f, AlphaMVariant::open_witnesses);
    CHECK(open_variant.has(MapClass::alpha_m_continuous));
    CHECK(open_variant.has(MapClass::alpha_m_irresolute));
    CHECK_FALSE(open_variant.has(MapClass::continuous));
    CHECK(open_variant.has(MapClass::closed_map));
}

TEST_CASE("alpha-m continuity violations carry a replayable witness", "[classifiers]") {
    const auto f = fixture::line_to_sierpinski();
    const SpaceTables x(f.domain());
    const SpaceTables y(f.codomain());

    const auto v =
        alpha_m_continuity_violation(x, y, f.image_array(), AlphaMVariant::alpha_open_witnesses);
    REQUIRE(v.has_value());
    CHECK(v->closed_set == SubsetMask(0b10, 2));   // {q} is closed in the codomain
    CHECK(v->preimage == SubsetMask(0b101, 3));    // pulls back to {a,c}
    CHECK(v->witness == SubsetMask(0b101, 3));

    CHECK_FALSE(
        alpha_m_continuity_violation(x, y, f.image_array(), AlphaMVariant::open_witnesses)
            .has_value());
}

TEST_CASE("open and closed formulations of alpha-m continuity agree", "[classifiers]") {
    const auto f = fixture::line_to_sierpinski();
    const SpaceTables x(f.domain());
    const SpaceTables y(f.codomain());
    for (AlphaMVariant v : kBothVariants)
        CHECK(open_closed_formulation_agrees(x, y, f.image_array(), v));
}

TEST_CASE("constant maps are continuous", "[classifiers]") {
    const auto x = fixture::two_open_points();
    const auto y = fixture::sierpinski();
    for (std::uint8_t target : {std::uint8_t{0}, std::uint8_t{1}}) {
        const auto f = PointMap(x, y, {target, target, target});
        CHECK(classify_map(f).has(MapClass::continuous));
        CHECK(classify_map(f).has(MapClass::alpha_m_continuous));
    }
}
