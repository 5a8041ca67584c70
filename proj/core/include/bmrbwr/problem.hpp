#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bmrbwr/bounds.hpp"
#include "bmrbwr/constraints.hpp"

namespace bmrbwr {

using objective_fn = std::function<double(const std::vector<double>&)>;

struct problem_spec {
    std::string name;
    std::size_t dimension = 0;
    bounds box;
    sense opt_sense = sense::minimize;
    objective_fn objective;
    constraint_set constraints;
    std::optional<double> known_best;
    std::string source_note;

    bool constrained() const { return !constraints.empty(); }
};

struct evaluation {
    double objective = 0.0;
    std::vector<double> g_values;
    std::vector<double> h_values;
};

/// Evaluates objective and all constraints at x. One call is one function
/// evaluation for budget accounting. Throws std::invalid_argument when the
/// length of x does not match the problem dimension.
evaluation evaluate(const problem_spec& problem, const std::vector<double>& x);

}  // namespace bmrbwr
