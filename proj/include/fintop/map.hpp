#pragma once

// Point maps between finite spaces, stored as image arrays.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fintop/errors.hpp"
#include "fintop/mask.hpp"
#include "fintop/space.hpp"

namespace fintop {

/// Preimage of the codomain mask `b` under the image array.
inline std::uint32_t preimage_bits(std::span<const std::uint8_t> image, std::uint32_t b) {
    std::uint32_t out = 0;
    for (std::size_t x = 0; x < image.size(); ++x)
        if ((b >> image[x]) & 1u) out |= (1u << x);
    return out;
}

/// Forward image of the domain mask `a`.
inline std::uint32_t image_bits(std::span<const std::uint8_t> image, std::uint32_t a) {
    std::uint32_t out = 0;
    for (std::uint32_t rest = a; rest != 0; rest &= rest - 1)
        out |= (1u << image[static_cast<std::size_t>(std::countr_zero(rest))]);
    return out;
}

/// (g after f) as image arrays.
inline std::vector<std::uint8_t> compose_images(std::span<const std::uint8_t> f,
                                                std::span<const std::uint8_t> g) {
    std::vector<std::uint8_t> out(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) out[x] = g[f[x]];
    return out;
}

/// A total function between two finite spaces. Immutable value type.
class PointMap {
public:
    PointMap(FiniteSpace domain, FiniteSpace codomain, std::vector<std::uint8_t> image)
        : domain_(std::move(domain)), codomain_(std::move(codomain)), image_(std::move(image)) {
        if (image_.size() != static_cast<std::size_t>(domain_.ground_size()))
            throw std::invalid_argument("image array size must equal the domain size");
        for (std::uint8_t y : image_)
            if (y >= codomain_.ground_size())
                throw std::invalid_argument("image point out of codomain range");
    }

    const FiniteSpace& domain() const { return domain_; }
    const FiniteSpace& codomain() const { return codomain_; }
    std::span<const std::uint8_t> image_array() const { return image_; }
    int apply(int x) const { return image_.at(static_cast<std::size_t>(x)); }

    bool surjective() const {
        return image_bits(image_, full_bits(domain_.ground_size())) == full_bits(codomain_.ground_size());
    }
    bool injective() const {
        std::uint32_t seen = 0;
        for (std::uint8_t y : image_) {
            if ((seen >> y) & 1u) return false;
            seen |= (1u << y);
        }
        return true;
    }

    friend bool operator==(const PointMap& a, const PointMap& b) {
        return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.image_ == b.image_;
    }

private:
    FiniteSpace domain_;
    FiniteSpace codomain_;
    std::vector<std::uint8_t> image_;
};

inline SubsetMask preimage(const PointMap& f, SubsetMask b) {
    if (b.ground_size() != f.codomain().ground_size())
        throw std::invalid_argument("preimage argument lives on the wrong ground set");
    return SubsetMask(preimage_bits(f.image_array(), b.bits()), f.domain().ground_size());
}

inline SubsetMask image(const PointMap& f, SubsetMask a) {
    if (a.ground_size() != f.domain().ground_size())
        throw std::invalid_argument("image argument lives on the wrong ground set");
    return SubsetMask(image_bits(f.image_array(), a.bits()), f.codomain().ground_size());
}

/// compose(f, g) = g after f. Requires f's codomain to equal g's domain as a
/// validated space, not merely to have the same size.
inline PointMap compose(const PointMap& f, const PointMap& g) {
    if (!(f.codomain() == g.domain()))
        throw SpaceMismatchError("compose: f's codomain differs from g's domain");
    return PointMap(f.domain(), g.codomain(), compose_images(f.image_array(), g.image_array()));
}

inline PointMap identity_map(const FiniteSpace& s) {
    std::vector<std::uint8_t> image(static_cast<std::size_t>(s.ground_size()));
    for (std::size_t i = 0; i < image.size(); ++i) image[i] = static_cast<std::uint8_t>(i);
    return PointMap(s, s, std::move(image));
}

}  // namespace fintop
