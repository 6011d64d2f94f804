#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fintop/claims.hpp"
#include "support/fixtures.hpp"

using namespace fintop;

namespace {

// One catalog store for the whole file; enumeration happens once.
CatalogStore& shared_store() {
    static CatalogStore store;
    return store;
}

ClaimVerdict run(const std::string& id, AlphaMVariant variant, SearchBudget budget = {},
                 unsigned workers = 2) {
    RunOptions opts;
    opts.workers = workers;
    opts.store = &shared_store();
    return run_claim(id, budget, variant, opts);
}

const std::vector<std::string> kExpectedIds = {
    "C-3.2-conv",   "C-3.2-fwd",        "C-3.4-I",          "C-3.4-II",
    "C-3.4-III-ab", "C-3.4-III-bc",     "C-3.5",            "C-3.5-lemma",
    "C-3.6",        "C-3.6-lemma-trans", "C-3.6-lemma-union", "C-4.2",
    "C-4.3",        "C-4.4-i",          "C-4.4-ii",         "C-4.4-ii-proof",
    "C-alpha-topology", "C-ex-3.3",
};

}  // namespace

TEST_CASE("the registry lists every claim exactly once, sorted by id", "[claims]") {
    std::vector<std::string> ids;
    for (const ClaimSpec& c : registered_claims()) {
        ids.push_back(c.id);
        CHECK_FALSE(c.statement.empty());
        CHECK_FALSE(c.universe.empty());
        CHECK(c.run != nullptr);
        CHECK(c.replay != nullptr);
        CHECK(c.fatal_on_violation == (c.id == "C-3.4-I"));
    }
    CHECK(ids == kExpectedIds);

    CHECK(find_claim("C-3.5").id == "C-3.5");
    CHECK_THROWS_AS(find_claim("C-9.9"), UnknownClaimError);
}

TEST_CASE("outcome and kind names", "[claims]") {
    CHECK(to_string(ClaimOutcome::verified_up_to) == "verified-up-to");
    CHECK(to_string(ClaimOutcome::counterexample) == "counterexample");
    CHECK(to_string(ClaimOutcome::budget_exceeded) == "budget-exceeded");
    CHECK(to_string(ClaimKind::implication_over_maps) == "implication-over-maps");
    CHECK(to_string(ClaimKind::construction_validity) == "construction-validity");
}

TEST_CASE("verdicts across the full registry at the default budget", "[claims]") {
    // Which statements survive exhaustive search over all spaces with at most
    // three points, per witness-family variant.
    const std::map<std::string, ClaimOutcome> alpha_open_expected = {
        {"C-3.2-conv", ClaimOutcome::counterexample},
        {"C-3.2-fwd", ClaimOutcome::verified_up_to},
        {"C-3.4-I", ClaimOutcome::verified_up_to},
        {"C-3.4-II", ClaimOutcome::verified_up_to},
        {"C-3.4-III-ab", ClaimOutcome::verified_up_to},
        {"C-3.4-III-bc", ClaimOutcome::verified_up_to},
        {"C-3.5", ClaimOutcome::counterexample},
        {"C-3.5-lemma", ClaimOutcome::verified_up_to},
        {"C-3.6", ClaimOutcome::verified_up_to},
        {"C-3.6-lemma-trans", ClaimOutcome::verified_up_to},
        {"C-3.6-lemma-union", ClaimOutcome::counterexample},
        {"C-4.2", ClaimOutcome::verified_up_to},
        {"C-4.3", ClaimOutcome::verified_up_to},
        {"C-4.4-i", ClaimOutcome::verified_up_to},
        {"C-4.4-ii", ClaimOutcome::counterexample},
        {"C-4.4-ii-proof", ClaimOutcome::verified_up_to},
        {"C-alpha-topology", ClaimOutcome::verified_up_to},
        {"C-ex-3.3", ClaimOutcome::counterexample},
    };
    // Under open witnesses two verdicts flip: the intersection lemma gains a
    // counterexample and the fixed reference instance stops violating.
    auto open_expected = alpha_open_expected;
    open_expected["C-3.5-lemma"] = ClaimOutcome::counterexample;
    open_expected["C-ex-3.3"] = ClaimOutcome::verified_up_to;

    for (const auto& [id, expected] : alpha_open_expected) {
        const auto v = run(id, AlphaMVariant::alpha_open_witnesses);
        INFO(id << " under alpha-open witnesses");
        CHECK(v.outcome == expected);
        CHECK(v.claim_id == id);
        CHECK((v.outcome == ClaimOutcome::counterexample) == v.witness.has_value());
        if (v.witness) CHECK(replay_witness(v));
    }
    for (const auto& [id, expected] : open_expected) {
        const auto v = run(id, AlphaMVariant::open_witnesses);
        INFO(id << " under open witnesses");
        CHECK(v.outcome == expected);
        if (v.witness) CHECK(replay_witness(v));
    }
}

TEST_CASE("the continuity converse fails on the smallest possible pair", "[claims]") {
    const auto v = run("C-3.2-conv", AlphaMVariant::alpha_open_witnesses);
    REQUIRE(v.outcome == ClaimOutcome::counterexample);
    REQUIRE(v.witness.has_value());
    const auto& w = *v.witness;

    REQUIRE(w.spaces.size() == 2);
    CHECK(w.spaces[0].role == "domain");
    CHECK(w.spaces[0].space.opens() == std::vector<std::uint16_t>{0, 3});  // indiscrete pair
    CHECK(w.spaces[1].role == "codomain");
    CHECK(w.spaces[1].space.opens() == std::vector<std::uint16_t>{0, 1, 2, 3});  // discrete pair
    REQUIRE(w.maps.size() == 1);
    CHECK(w.maps[0].image == std::vector<std::uint8_t>{0, 1});
    CHECK_FALSE(w.detail.empty());

    CHECK(replay_witness(v));

    // A tampered witness must not replay: the constant map is continuous.
    auto tampered = v;
    tampered.witness->maps[0].image = {0, 0};
    CHECK_FALSE(replay_witness(tampered));
}

TEST_CASE("restriction to a closed carrier does not preserve the map class", "[claims]") {
    for (AlphaMVariant variant : kBothVariants) {
        const auto v = run("C-3.5", variant);
        REQUIRE(v.outcome == ClaimOutcome::counterexample);
        REQUIRE(v.witness.has_value());
        const auto& w = *v.witness;

        // Domain {0,1,{a},{b},{a,b},X} with the discrete pair as codomain: the
        // map a,c -> p, b -> q has alpha-m closed preimages, but restricting
        // to the closed carrier {b,c} leaves {b} non-alpha-m-closed in the
        // subspace (a local Sierpinski pair).
        CHECK(w.spaces[0].space.opens() == std::vector<std::uint16_t>{0, 1, 2, 3, 7});
        CHECK(w.spaces[1].space.opens() == std::vector<std::uint16_t>{0, 1, 2, 3});
        REQUIRE(w.maps.size() == 1);
        CHECK(w.maps[0].image == std::vector<std::uint8_t>{0, 1, 0});
        REQUIRE_FALSE(w.subsets.empty());
        CHECK(w.subsets[0].role == "carrier H");
        CHECK(w.subsets[0].subset == SubsetMask(0b110, 3));
        CHECK(replay_witness(v));
    }
}

TEST_CASE("the intersection lemma splits between the witness families", "[claims]") {
    const auto printed = run("C-3.5-lemma", AlphaMVariant::alpha_open_witnesses);
    CHECK(printed.outcome == ClaimOutcome::verified_up_to);
    CHECK_FALSE(printed.witness.has_value());
    CHECK_FALSE(replay_witness(printed));

    const auto open_variant = run("C-3.5-lemma", AlphaMVariant::open_witnesses);
    REQUIRE(open_variant.outcome == ClaimOutcome::counterexample);
    REQUIRE(open_variant.witness.has_value());
    const auto& w = *open_variant.witness;
    CHECK(w.spaces[0].space.opens() == std::vector<std::uint16_t>{0, 1, 7});
    REQUIRE(w.subsets.size() == 3);
    CHECK(w.subsets[0].subset == SubsetMask(0b011, 3));
    CHECK(w.subsets[1].subset == SubsetMask(0b101, 3));
    CHECK(w.subsets[2].role == "A intersect B");
    CHECK(w.subsets[2].subset == SubsetMask(0b001, 3));
    CHECK(replay_witness(open_variant));
}

TEST_CASE("alpha-m closed sets are not closed under union", "[claims]") {
    for (AlphaMVariant variant : kBothVariants) {
        const auto v = run("C-3.6-lemma-union", variant);
        REQUIRE(v.outcome == ClaimOutcome::counterexample);
        REQUIRE(v.witness.has_value());
        const auto& w = *v.witness;
        CHECK(w.spaces[0].space.opens() == std::vector<std::uint16_t>{0, 1, 2, 3, 7});
        REQUIRE(w.subsets.size() == 3);
        CHECK(w.subsets[0].subset == SubsetMask(0b001, 3));
        CHECK(w.subsets[1].subset == SubsetMask(0b010, 3));
        CHECK(w.subsets[2].role == "A union B");
        CHECK(w.subsets[2].subset == SubsetMask(0b011, 3));
        CHECK(replay_witness(v));
    }
}

TEST_CASE("factoring through an injective irresolute map fails as printed", "[claims]") {
    const auto v = run("C-4.4-ii", AlphaMVariant::alpha_open_witnesses);
    REQUIRE(v.outcome == ClaimOutcome::counterexample);
    REQUIRE(v.witness.has_value());
    const auto& w = *v.witness;

    REQUIRE(w.spaces.size() == 3);
    CHECK(w.spaces[0].role == "domain");
    CHECK(w.spaces[1].role == "middle");
    CHECK(w.spaces[2].role == "codomain");
    CHECK(w.spaces[0].space.ground_size() == 1);
    CHECK(w.spaces[1].space.opens() == std::vector<std::uint16_t>{0, 1, 3});
    CHECK(w.spaces[2].space.opens() == std::vector<std::uint16_t>{0, 3});
    REQUIRE(w.maps.size() == 2);
    CHECK(w.maps[0].role == "f");
    CHECK(w.maps[0].image == std::vector<std::uint8_t>{0});
    CHECK(w.maps[1].role == "g");
    CHECK(w.maps[1].image == std::vector<std::uint8_t>{0, 1});
    CHECK(replay_witness(v));

    // Strengthening the hypothesis to alpha-m irresoluteness repairs it.
    CHECK(run("C-4.4-ii-proof", AlphaMVariant::alpha_open_witnesses).outcome ==
          ClaimOutcome::verified_up_to);
}

TEST_CASE("the fixed reference instance violates only under alpha-open witnesses", "[claims]") {
    const auto& instance = variant_divergence_instance();
    CHECK(instance.domain.opens() == std::vector<std::uint16_t>{0, 1, 7});
    CHECK(instance.codomain.opens() == std::vector<std::uint16_t>{0, 1, 3});
    CHECK(instance.image == std::vector<std::uint8_t>{1, 0, 1});

    const auto printed = run("C-ex-3.3", AlphaMVariant::alpha_open_witnesses);
    REQUIRE(printed.outcome == ClaimOutcome::counterexample);
    REQUIRE(printed.witness.has_value());
    CHECK(printed.witness->spaces[0].space == instance.domain);
    CHECK(printed.witness->spaces[1].space == instance.codomain);
    CHECK(printed.witness->maps[0].image == instance.image);
    REQUIRE(printed.witness->subsets.size() == 3);
    CHECK(printed.witness->subsets[0].subset == SubsetMask(0b10, 2));   // closed {q}
    CHECK(printed.witness->subsets[1].subset == SubsetMask(0b101, 3));  // preimage {a,c}
    CHECK(printed.witness->subsets[2].subset == SubsetMask(0b101, 3));  // violating witness
    CHECK(replay_witness(printed));

    CHECK(run("C-ex-3.3", AlphaMVariant::open_witnesses).outcome ==
          ClaimOutcome::verified_up_to);
}

TEST_CASE("the counting driver reports skipped constructions", "[claims]") {
    for (AlphaMVariant variant : kBothVariants) {
        const auto v = run("C-3.4-III-bc", variant);
        CHECK(v.outcome == ClaimOutcome::verified_up_to);
        // Three of the 29 three-point spaces have a tau-star family that is
        // not a topology; each is skipped once per map into the universe.
        CHECK(v.construction_failures == 2448);
    }

    SearchBudget small;
    small.max_domain_n = 2;
    small.max_codomain_n = 2;
    const auto v = run("C-3.4-III-bc", AlphaMVariant::alpha_open_witnesses, small);
    CHECK(v.outcome == ClaimOutcome::verified_up_to);
    CHECK(v.construction_failures == 0);
}

TEST_CASE("the budget bounds what the verdict can say", "[claims]") {
    SearchBudget pairs_only;
    pairs_only.max_domain_n = 2;
    pairs_only.max_codomain_n = 2;
    CHECK(run("C-3.5", AlphaMVariant::alpha_open_witnesses, pairs_only).outcome ==
          ClaimOutcome::verified_up_to);  // the refutation needs three points

    SearchBudget capped;
    capped.max_witness_spaces = 1;  // only the first catalog entry per size
    CHECK(run("C-3.2-conv", AlphaMVariant::alpha_open_witnesses, capped).outcome ==
          ClaimOutcome::verified_up_to);

    SearchBudget expired;
    expired.time_limit = std::chrono::milliseconds(0);
    const auto v = run("C-3.2-fwd", AlphaMVariant::alpha_open_witnesses, expired);
    CHECK(v.outcome == ClaimOutcome::budget_exceeded);
    CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("witnesses do not depend on the worker count", "[claims]") {
    const auto one = run("C-3.5", AlphaMVariant::alpha_open_witnesses, {}, 1);
    const auto four = run("C-3.5", AlphaMVariant::alpha_open_witnesses, {}, 4);
    REQUIRE(one.witness.has_value());
    REQUIRE(four.witness.has_value());
    CHECK(one.outcome == four.outcome);
    CHECK(one.witness->detail == four.witness->detail);
    REQUIRE(one.witness->spaces.size() == four.witness->spaces.size());
    for (std::size_t i = 0; i < one.witness->spaces.size(); ++i)
        CHECK(one.witness->spaces[i].space == four.witness->spaces[i].space);
    REQUIRE(one.witness->maps.size() == four.witness->maps.size());
    for (std::size_t i = 0; i < one.witness->maps.size(); ++i)
        CHECK(one.witness->maps[i].image == four.witness->maps[i].image);
    REQUIRE(one.witness->subsets.size() == four.witness->subsets.size());
    for (std::size_t i = 0; i < one.witness->subsets.size(); ++i)
        CHECK(one.witness->subsets[i].subset == four.witness->subsets[i].subset);
}

TEST_CASE("run_all_claims walks the registry in order", "[claims]") {
    SearchBudget tiny;
    tiny.max_domain_n = 1;
    tiny.max_codomain_n = 1;
    RunOptions opts;
    opts.store = &shared_store();
    // Open witnesses so even the budget-independent reference instance
    // verifies; every searched claim is vacuous on one-point spaces.
    const auto verdicts = run_all_claims(tiny, AlphaMVariant::open_witnesses, opts);
    REQUIRE(verdicts.size() == kExpectedIds.size());
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        CHECK(verdicts[i].claim_id == kExpectedIds[i]);
        CHECK(verdicts[i].outcome == ClaimOutcome::verified_up_to);
    }
}

TEST_CASE("unknown claim ids are rejected up front", "[claims]") {
    CHECK_THROWS_AS(run_claim("C-0.0", SearchBudget{}, kDefaultVariant), UnknownClaimError);
}
