#pragma once

#include <vector>

#include "bmrbwr/problem.hpp"

namespace bmrbwr {

struct candidate {
    std::vector<double> position;
    double objective = 0.0;
    std::vector<double> violations;  // metric violations, one per constraint
    double penalized = 0.0;

    bool feasible() const {
        for (double v : violations)
            if (v != 0.0) return false;
        return true;
    }
};

/// True when fitness a beats fitness b for the given sense (strict).
inline bool better_fitness(double a, double b, sense s) {
    return s == sense::minimize ? a < b : a > b;
}

/// Evaluates x on the problem and fills in penalized fitness and metric
/// violations. A non-finite objective or constraint value marks the candidate
/// as unconditionally losing (penalized +inf for minimization, -inf for
/// maximization) instead of propagating NaN into selection.
candidate evaluate_candidate(const problem_spec& problem, std::vector<double> position,
                             double penalty_weight, double equality_tolerance);

struct population {
    std::vector<candidate> members;
    std::size_t best_index = 0;
    std::size_t worst_index = 0;
    std::vector<double> mean_position;

    std::size_t size() const { return members.size(); }

    /// Recomputes best/worst (ties -> lowest index) and the per-variable mean.
    /// Roles are refreshed once per iteration, never mid-iteration.
    void refresh_roles(sense s);
};

}  // namespace bmrbwr
