#pragma once

#include <cstddef>
#include <vector>

namespace bmrbwr {

/// Per-variable search box. lower[j] < upper[j] for every j.
struct bounds {
    std::vector<double> lower;
    std::vector<double> upper;

    std::size_t size() const { return lower.size(); }

    /// Throws std::invalid_argument on mismatched lengths or an empty/inverted interval.
    void validate() const;

    /// Uniform box [lo, hi]^dimension.
    static bounds uniform(std::size_t dimension, double lo, double hi);
};

/// Component-wise clamp of v into b. Lengths must match.
std::vector<double> clamp(const std::vector<double>& v, const bounds& b);

}  // namespace bmrbwr
