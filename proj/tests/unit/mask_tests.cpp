#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "fintop/mask.hpp"
#include "fintop/names.hpp"

using namespace fintop;

TEST_CASE("full_bits covers the allowed ground sizes", "[mask]") {
    CHECK(full_bits(0) == 0u);
    CHECK(full_bits(1) == 0b1u);
    CHECK(full_bits(3) == 0b111u);
    CHECK(full_bits(16) == 0xFFFFu);
}

TEST_CASE("bits_subset is containment", "[mask]") {
    CHECK(bits_subset(0b000, 0b000));
    CHECK(bits_subset(0b001, 0b101));
    CHECK(bits_subset(0b101, 0b101));
    CHECK_FALSE(bits_subset(0b010, 0b101));
    CHECK_FALSE(bits_subset(0b111, 0b101));
}

TEST_CASE("compress and expand are inverse re-indexings", "[mask]") {
    // within = {0,2}: bit 2 of the parent becomes bit 1 of the dense mask.
    CHECK(compress_bits(0b100, 0b101) == 0b10u);
    CHECK(compress_bits(0b001, 0b101) == 0b01u);
    CHECK(compress_bits(0b101, 0b101) == 0b11u);
    CHECK(expand_bits(0b10, 0b101) == 0b100u);

    const std::uint32_t within = 0b11010;
    for (std::uint32_t dense = 0; dense < 8; ++dense)
        CHECK(compress_bits(expand_bits(dense, within), within) == dense);
}

TEST_CASE("for_each_superset visits supersets ascending and can stop early", "[mask]") {
    std::vector<std::uint32_t> seen;
    for_each_superset(0b001, 0b111, [&](std::uint32_t u) {
        seen.push_back(u);
        return true;
    });
    CHECK(seen == std::vector<std::uint32_t>{0b001, 0b011, 0b101, 0b111});

    seen.clear();
    for_each_superset(0b001, 0b111, [&](std::uint32_t u) {
        seen.push_back(u);
        return u != 0b011;
    });
    CHECK(seen == std::vector<std::uint32_t>{0b001, 0b011});

    seen.clear();
    for_each_superset(0b111, 0b111, [&](std::uint32_t u) {
        seen.push_back(u);
        return true;
    });
    CHECK(seen == std::vector<std::uint32_t>{0b111});
}

TEST_CASE("SubsetMask validates its ground set", "[mask]") {
    CHECK_THROWS_AS(SubsetMask(0, 17), std::invalid_argument);
    CHECK_THROWS_AS(SubsetMask(0, -1), std::invalid_argument);
    CHECK_THROWS_AS(SubsetMask(0b1000, 3), std::invalid_argument);
    CHECK_NOTHROW(SubsetMask(0b111, 3));

    const SubsetMask def;
    CHECK(def.ground_size() == 0);
    CHECK(def.bits() == 0u);
}

TEST_CASE("SubsetMask set algebra", "[mask]") {
    const auto a = SubsetMask(0b101, 3);
    const auto b = SubsetMask(0b011, 3);

    CHECK((a | b).bits() == 0b111u);
    CHECK((a & b).bits() == 0b001u);
    CHECK((a - b).bits() == 0b100u);
    CHECK(a.complement().bits() == 0b010u);
    CHECK(a.size() == 2);
    CHECK(a.contains(0));
    CHECK_FALSE(a.contains(1));
    CHECK(a.points() == std::vector<int>{0, 2});
    CHECK(SubsetMask::empty_set(3).is_empty());
    CHECK(SubsetMask::full_set(3).is_full());
    CHECK(SubsetMask::single(2, 3).bits() == 0b100u);
    CHECK_THROWS_AS(SubsetMask::single(3, 3), std::invalid_argument);

    CHECK(SubsetMask(0b001, 3).subset_of(a));
    CHECK_FALSE(b.subset_of(a));
    CHECK_THROWS_AS(a.subset_of(SubsetMask(0b01, 2)), std::invalid_argument);
    CHECK_THROWS_AS(a | SubsetMask(0b01, 2), std::invalid_argument);

    CHECK(SubsetMask(0b01, 2) < a);   // smaller ground set first
    CHECK(b < a);                     // then mask order
    CHECK(a == SubsetMask(0b101, 3));
    CHECK(a != b);
}

TEST_CASE("default names follow the role alphabets", "[names]") {
    CHECK(default_names(3, 0).names == std::vector<std::string>{"a", "b", "c"});
    CHECK(default_names(3, 1).names == std::vector<std::string>{"p", "q", "r"});
    CHECK(default_names(3, 2).names == std::vector<std::string>{"u", "v", "w"});
    CHECK(default_names(6, 2).names.back() == "z");
    CHECK(default_names(7, 2).names.front() == "x0");  // would run past 'z'
}

TEST_CASE("point name validation rejects bad lists", "[names]") {
    CHECK_THROWS_AS(PointNames::validated({"a", "a"}), std::invalid_argument);
    CHECK_THROWS_AS(PointNames::validated({"a", ""}), std::invalid_argument);
    CHECK_THROWS_AS(PointNames::validated(std::vector<std::string>(17, "x")), std::invalid_argument);
    CHECK(PointNames::validated({"left", "right"}).names.size() == 2);
}

TEST_CASE("subsets format with their point names", "[names]") {
    const auto names = default_names(3).names;
    CHECK(format_subset(SubsetMask(0b101, 3), names) == "{a,c}");
    CHECK(format_subset(SubsetMask(0, 3), names) == "{}");
    CHECK(format_subset(SubsetMask(0b111, 3)) == "{a,b,c}");
}
