#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bmrbwr/problem.hpp"

namespace bmrbwr::detail {

// One registry row: either a fixed-dimension problem or a scalable family
// that accepts a "-<dim>" name suffix.
struct catalog_family {
    std::string name;
    bool scalable = false;
    std::size_t default_dimension = 0;  // 0: a dimension suffix is required
    std::size_t min_dimension = 1;
    std::function<problem_spec(std::size_t)> build;
    // Returns the frozen optimum witness for the given dimension, if any.
    std::function<std::optional<std::vector<double>>(std::size_t)> witness;
};

void register_unconstrained(std::vector<catalog_family>& families);
void register_engineering(std::vector<catalog_family>& families);

}  // namespace bmrbwr::detail
