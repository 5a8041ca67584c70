#include "bmrbwr/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bmrbwr {

void bounds::validate() const {
    if (lower.size() != upper.size())
        throw std::invalid_argument("bounds: lower has " + std::to_string(lower.size()) +
                                    " entries, upper has " + std::to_string(upper.size()));
    if (lower.empty()) throw std::invalid_argument("bounds: empty");
    for (std::size_t j = 0; j < lower.size(); ++j) {
        if (!(lower[j] < upper[j]))
            throw std::invalid_argument("bounds: lower[" + std::to_string(j) +
                                        "] must be below upper[" + std::to_string(j) + "]");
    }
}

bounds bounds::uniform(std::size_t dimension, double lo, double hi) {
    return bounds{std::vector<double>(dimension, lo), std::vector<double>(dimension, hi)};
}

std::vector<double> clamp(const std::vector<double>& v, const bounds& b) {
    if (v.size() != b.size())
        throw std::invalid_argument("clamp: vector length " + std::to_string(v.size()) +
                                    " does not match bounds length " + std::to_string(b.size()));
    std::vector<double> out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j)
        out[j] = std::min(b.upper[j], std::max(b.lower[j], v[j]));
    return out;
}

}  // namespace bmrbwr
