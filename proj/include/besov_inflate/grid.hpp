#pragma once

#include <cstddef>
#include <numbers>

#include "besov_inflate/errors.hpp"

namespace besov {

// Uniform periodic grid on [-L/2, L/2).
struct GridSpec {
    double length = 0.0;
    std::size_t point_count = 0;

    static GridSpec make(double length, std::size_t point_count) {
        if (length <= 0.0)
            throw InvalidParamError("GridSpec: length must be positive");
        if (point_count < 16 || (point_count & (point_count - 1)) != 0)
            throw InvalidParamError("GridSpec: point_count must be a power of two >= 16");
        return GridSpec{length, point_count};
    }

    double spacing() const { return length / static_cast<double>(point_count); }
    double node(std::size_t i) const { return -0.5 * length + spacing() * static_cast<double>(i); }
    // frequency of rfft bin k, k = 0..N/2
    double freq(std::size_t k) const {
        return 2.0 * std::numbers::pi * static_cast<double>(k) / length;
    }
    double nyquist() const {
        return std::numbers::pi * static_cast<double>(point_count) / length;
    }
    std::size_t spectrum_size() const { return point_count / 2 + 1; }

    bool operator==(const GridSpec&) const = default;
};

} // namespace besov
