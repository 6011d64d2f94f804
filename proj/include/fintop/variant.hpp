#pragma once

#include <optional>
#include <string>

namespace fintop {

/// The alpha-m closedness notion quantifies int(cl(A)) <= U over a witness
/// family of supersets U of A. The definition admits two readings of that
/// family, and they genuinely classify sets differently, so both are first
/// class here. Every alpha-m dependent result is labeled with the variant
/// that produced it.
enum class AlphaMVariant {
    alpha_open_witnesses,  ///< witnesses range over alpha-open sets (the default)
    open_witnesses,        ///< witnesses range over open sets
};

inline constexpr AlphaMVariant kDefaultVariant = AlphaMVariant::alpha_open_witnesses;
inline constexpr AlphaMVariant kBothVariants[2] = {AlphaMVariant::alpha_open_witnesses,
                                                   AlphaMVariant::open_witnesses};

constexpr int variant_index(AlphaMVariant v) {
    return v == AlphaMVariant::alpha_open_witnesses ? 0 : 1;
}

inline std::string to_string(AlphaMVariant v) {
    return v == AlphaMVariant::alpha_open_witnesses ? "alpha-open" : "open";
}

inline std::optional<AlphaMVariant> parse_variant(const std::string& s) {
    if (s == "alpha-open") return AlphaMVariant::alpha_open_witnesses;
    if (s == "open") return AlphaMVariant::open_witnesses;
    return std::nullopt;
}

}  // namespace fintop
