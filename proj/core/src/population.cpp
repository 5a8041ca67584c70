#include "bmrbwr/population.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bmrbwr {

evaluation evaluate(const problem_spec& problem, const std::vector<double>& x) {
    if (x.size() != problem.dimension)
        throw std::invalid_argument(problem.name + ": expected " +
                                    std::to_string(problem.dimension) + " variables, got " +
                                    std::to_string(x.size()));
    evaluation out;
    out.objective = problem.objective(x);
    out.g_values.reserve(problem.constraints.inequalities.size());
    for (const auto& g : problem.constraints.inequalities) out.g_values.push_back(g(x));
    out.h_values.reserve(problem.constraints.equalities.size());
    for (const auto& h : problem.constraints.equalities) out.h_values.push_back(h(x));
    return out;
}

candidate evaluate_candidate(const problem_spec& problem, std::vector<double> position,
                             double penalty_weight, double equality_tolerance) {
    evaluation ev = evaluate(problem, position);

    bool finite = std::isfinite(ev.objective);
    for (double g : ev.g_values) finite = finite && std::isfinite(g);
    for (double h : ev.h_values) finite = finite && std::isfinite(h);

    candidate c;
    c.position = std::move(position);
    c.objective = ev.objective;
    if (finite) {
        c.violations = violations(ev.g_values, ev.h_values, equality_tolerance).per_constraint;
        c.penalized = penalize(ev.objective, ev.g_values, ev.h_values, penalty_weight,
                               problem.opt_sense);
    } else {
        // Singular in-bounds points (division by zero inside a constraint) must
        // lose every comparison without poisoning selection with NaN; at least
        // one infinite violation keeps them out of the feasibility counts even
        // on unconstrained problems.
        c.violations.assign(std::max<std::size_t>(problem.constraints.size(), 1),
                            std::numeric_limits<double>::infinity());
        c.penalized = problem.opt_sense == sense::minimize
                          ? std::numeric_limits<double>::infinity()
                          : -std::numeric_limits<double>::infinity();
    }
    return c;
}

void population::refresh_roles(sense s) {
    if (members.empty()) throw std::logic_error("population: no members");
    best_index = 0;
    worst_index = 0;
    for (std::size_t k = 1; k < members.size(); ++k) {
        if (better_fitness(members[k].penalized, members[best_index].penalized, s)) best_index = k;
        if (better_fitness(members[worst_index].penalized, members[k].penalized, s)) worst_index = k;
    }
    const std::size_t m = members.front().position.size();
    mean_position.assign(m, 0.0);
    for (const candidate& c : members)
        for (std::size_t j = 0; j < m; ++j) mean_position[j] += c.position[j];
    for (std::size_t j = 0; j < m; ++j) mean_position[j] /= static_cast<double>(members.size());
}

}  // namespace bmrbwr
