#pragma once

// Point names are presentation only: the core works on indices and the
// names are attached when reading files or printing reports.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fintop/mask.hpp"

namespace fintop {

/// Optional display names for the points of one space. When present there is
/// exactly one name per point and names are unique.
struct PointNames {
    std::vector<std::string> names;

    static PointNames validated(std::vector<std::string> names) {
        if (names.size() > static_cast<std::size_t>(kMaxGroundSize))
            throw std::invalid_argument("too many point names");
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i].empty()) throw std::invalid_argument("empty point name");
            for (std::size_t j = i + 1; j < names.size(); ++j)
                if (names[i] == names[j])
                    throw std::invalid_argument("duplicate point name: " + names[i]);
        }
        return PointNames{std::move(names)};
    }
};

/// Default names for enumerated witnesses. Role 0 draws from a..,
/// role 1 from p.., role 2 from u..; anything that would run past 'z'
/// falls back to x0, x1, ...
inline PointNames default_names(int n, int role = 0) {
    static constexpr char starts[3] = {'a', 'p', 'u'};
    char start = starts[role % 3];
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(n));
    if (start + n - 1 <= 'z') {
        for (int i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>(start + i));
    } else {
        for (int i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
    }
    return PointNames{std::move(out)};
}

/// "{a,c}"; the empty set prints as "{}".
inline std::string format_subset(SubsetMask mask, const std::vector<std::string>& names) {
    std::string out = "{";
    bool first = true;
    for (int p : mask.points()) {
        if (!first) out += ",";
        first = false;
        out += names.at(static_cast<std::size_t>(p));
    }
    out += "}";
    return out;
}

inline std::string format_subset(SubsetMask mask) {
    return format_subset(mask, default_names(mask.ground_size()).names);
}

}  // namespace fintop
