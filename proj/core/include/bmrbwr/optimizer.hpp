#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bmrbwr/population.hpp"
#include "bmrbwr/problem.hpp"
#include "bmrbwr/random.hpp"

namespace bmrbwr {

enum class algorithm { bmr, bwr };

std::string to_string(algorithm a);
algorithm algorithm_from_string(const std::string& name);

struct run_config {
    std::size_t population_size = 20;
    long long max_function_evaluations = 500000;
    algorithm algo = algorithm::bmr;
    double penalty_weight = 10.0;
    double equality_tolerance = 1e-4;   // metrics only, never the penalty
    std::uint64_t seed = 0;
    double success_tolerance = 1e-8;
    bool record_trace = true;

    /// Throws std::invalid_argument when any field is out of range. The budget
    /// must cover at least the initial population, and at least three members
    /// are needed to keep the best/worst/random roles distinct.
    void validate() const;
};

struct iteration_record {
    long long iteration = 0;
    long long fe_count = 0;
    double best_penalized = 0.0;
    double mean_penalized = 0.0;
};

struct run_result {
    candidate best;
    std::vector<iteration_record> trace;
    long long fe_used = 0;
    std::optional<long long> fe_to_success;
    bool found_feasible = false;  // any feasible point seen within budget
};

/// Draws n*m position uniforms (candidate-major), then evaluates the n members.
/// Accepts any n >= 1; run_config::validate is the caller's gate.
population initialize_population(const problem_spec& problem, const run_config& config,
                                 random_stream& rng);

/// Trial-vector rules. Draw order per candidate, fixed for reproducibility:
///   partner index u (one partner per candidate, shared across variables),
///   T u (T = 1 if u < 0.5 else 2),
///   then per variable j ascending: r4; if r4 > 0.5 draw r1, r2 and move
///     trial[j] = V[j,k] + r1*(V[j,best] - T*mean[j]) + r2*(V[j,best] - V[j,p])
///   else draw r3 and reinitialize trial[j] = upper[j] - (upper[j] - lower[j])*r3.
/// r4 = 0.5 exactly reinitializes. The result is clamped to the bounds.
/// The population is read-only: roles and positions are the frozen
/// start-of-iteration state.
std::vector<double> bmr_trial(std::size_t k, const population& pop, const bounds& b,
                              random_stream& rng);

/// Same protocol; the move uses the worst member instead of the mean:
///   trial[j] = V[j,k] + r1*(V[j,best] - T*V[j,p]) - r2*(V[j,worst] - V[j,p]).
std::vector<double> bwr_trial(std::size_t k, const population& pop, const bounds& b,
                              random_stream& rng);

/// Keeps the fitter of the two by penalized fitness; exact tie keeps current.
const candidate& greedy_select(const candidate& current, const candidate& trial, sense s);

/// Budgeted loop: initialize, then full iterations (one trial + evaluation +
/// selection per member) until the next iteration would exceed the budget.
/// Roles are frozen during an iteration and refreshed after it. fe_used is
/// exactly population_size * (1 + completed iterations). fe_to_success is the
/// FE count at the first feasible evaluation within success_tolerance of the
/// known best (when the problem has one).
run_result run(const problem_spec& problem, const run_config& config, random_stream& rng);

}  // namespace bmrbwr
