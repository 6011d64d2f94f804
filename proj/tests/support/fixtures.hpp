#pragma once

// Small named spaces and maps reused across the test files. Masks follow the
// library convention: point i of a space is bit i, so on points {a,b,c} the
// mask 0b101 = 5 is {a,c}.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "fintop/map.hpp"
#include "fintop/space.hpp"

namespace fintop::fixture {

/// Three points a,b,c where the only nontrivial open set is {a}.
inline FiniteSpace point_line() { return make_topology(3, {0b000, 0b001, 0b111}); }

/// Two points p,q with {p} open: the smallest space that separates the
/// open-type classes from each other.
inline FiniteSpace sierpinski() { return make_topology(2, {0b00, 0b01, 0b11}); }

/// Three points where {a} and {b} are both open. The alpha-m closed sets of
/// this space are not closed under unions, which several tests lean on.
inline FiniteSpace two_open_points() {
    return make_topology(3, {0b000, 0b001, 0b010, 0b011, 0b111});
}

/// The map from point_line() onto sierpinski() with a -> q, b -> p, c -> q
/// (codomain points p,q with p = bit 0).
inline PointMap line_to_sierpinski() { return PointMap(point_line(), sierpinski(), {1, 0, 1}); }

/// Unique scratch directory under the system temp root, removed on destruction.
class TempDir {
public:
    TempDir() {
        auto root = std::filesystem::temp_directory_path();
        std::mt19937_64 rng{std::random_device{}()};
        for (int attempt = 0; attempt < 64; ++attempt) {
            auto candidate = root / ("fintop-test-" + std::to_string(rng()));
            std::error_code ec;
            if (std::filesystem::create_directory(candidate, ec)) {
                path_ = candidate;
                return;
            }
        }
        throw std::runtime_error("could not create a scratch directory");
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }

    const std::filesystem::path& path() const { return path_; }

    std::filesystem::path write(const std::string& name, const std::string& text) const {
        auto file = path_ / name;
        std::ofstream out(file);
        out << text;
        return file;
    }

private:
    std::filesystem::path path_;
};

}  // namespace fintop::fixture
