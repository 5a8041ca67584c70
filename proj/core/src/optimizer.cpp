#include "bmrbwr/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bmrbwr {

std::string to_string(algorithm a) { return a == algorithm::bmr ? "bmr" : "bwr"; }

algorithm algorithm_from_string(const std::string& name) {
    if (name == "bmr" || name == "BMR") return algorithm::bmr;
    if (name == "bwr" || name == "BWR") return algorithm::bwr;
    throw std::invalid_argument("unknown algorithm '" + name + "' (expected bmr or bwr)");
}

void run_config::validate() const {
    if (population_size < 3)
        throw std::invalid_argument("population_size must be at least 3");
    if (max_function_evaluations < static_cast<long long>(population_size))
        throw std::invalid_argument("max_function_evaluations must cover the initial population");
    if (!(penalty_weight > 0.0)) throw std::invalid_argument("penalty_weight must be positive");
    if (!(equality_tolerance >= 0.0))
        throw std::invalid_argument("equality_tolerance must be nonnegative");
    if (!(success_tolerance > 0.0))
        throw std::invalid_argument("success_tolerance must be positive");
}

population initialize_population(const problem_spec& problem, const run_config& config,
                                 random_stream& rng) {
    problem.box.validate();
    if (problem.box.size() != problem.dimension)
        throw std::invalid_argument(problem.name + ": bounds do not match dimension");
    const std::size_t n = config.population_size;
    const std::size_t m = problem.dimension;

    // All n*m position draws happen before any evaluation.
    std::vector<std::vector<double>> positions(n, std::vector<double>(m));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < m; ++j) {
            const double u = rng.next_uniform();
            positions[k][j] = problem.box.lower[j] + u * (problem.box.upper[j] - problem.box.lower[j]);
        }

    population pop;
    pop.members.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        pop.members.push_back(evaluate_candidate(problem, std::move(positions[k]),
                                                 config.penalty_weight, config.equality_tolerance));
    pop.refresh_roles(problem.opt_sense);
    return pop;
}

namespace {

std::size_t draw_partner(std::size_t k, std::size_t n, random_stream& rng) {
    const double u = rng.next_uniform();
    std::size_t idx = static_cast<std::size_t>(u * static_cast<double>(n - 1));
    idx = std::min(idx, n - 2);
    return idx < k ? idx : idx + 1;
}

int draw_t(random_stream& rng) { return rng.next_uniform() < 0.5 ? 1 : 2; }

std::vector<double> trial_vector(algorithm algo, std::size_t k, const population& pop,
                                 const bounds& b, random_stream& rng) {
    const std::size_t n = pop.size();
    const std::size_t m = b.size();
    if (k >= n) throw std::invalid_argument("trial: candidate index out of range");
    if (n < 2) throw std::invalid_argument("trial: need at least two members");

    const std::size_t p = draw_partner(k, n, rng);
    const int t = draw_t(rng);

    const std::vector<double>& self = pop.members[k].position;
    const std::vector<double>& best = pop.members[pop.best_index].position;
    const std::vector<double>& worst = pop.members[pop.worst_index].position;
    const std::vector<double>& partner = pop.members[p].position;

    std::vector<double> trial(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double r4 = rng.next_uniform();
        if (r4 > 0.5) {
            const double r1 = rng.next_uniform();
            const double r2 = rng.next_uniform();
            if (algo == algorithm::bmr)
                trial[j] = self[j] + r1 * (best[j] - t * pop.mean_position[j]) +
                           r2 * (best[j] - partner[j]);
            else
                trial[j] = self[j] + r1 * (best[j] - t * partner[j]) -
                           r2 * (worst[j] - partner[j]);
        } else {
            const double r3 = rng.next_uniform();
            trial[j] = b.upper[j] - (b.upper[j] - b.lower[j]) * r3;
        }
    }
    return clamp(trial, b);
}

}  // namespace

std::vector<double> bmr_trial(std::size_t k, const population& pop, const bounds& b,
                              random_stream& rng) {
    return trial_vector(algorithm::bmr, k, pop, b, rng);
}

std::vector<double> bwr_trial(std::size_t k, const population& pop, const bounds& b,
                              random_stream& rng) {
    return trial_vector(algorithm::bwr, k, pop, b, rng);
}

const candidate& greedy_select(const candidate& current, const candidate& trial, sense s) {
    return better_fitness(trial.penalized, current.penalized, s) ? trial : current;
}

run_result run(const problem_spec& problem, const run_config& config, random_stream& rng) {
    config.validate();
    const std::size_t n = config.population_size;
    const sense s = problem.opt_sense;

    run_result result;
    long long fe = 0;

    auto note_evaluation = [&](const candidate& c) {
        ++fe;
        if (!c.feasible()) return;
        result.found_feasible = true;
        if (!result.fe_to_success && problem.known_best &&
            std::fabs(c.objective - *problem.known_best) <= config.success_tolerance)
            result.fe_to_success = fe;
    };

    population pop = initialize_population(problem, config, rng);
    for (const candidate& c : pop.members) note_evaluation(c);

    auto record = [&](long long iteration) {
        if (!config.record_trace) return;
        double sum = 0.0;
        for (const candidate& c : pop.members) sum += c.penalized;
        result.trace.push_back({iteration, fe, pop.members[pop.best_index].penalized,
                                sum / static_cast<double>(n)});
    };
    record(0);

    long long iteration = 0;
    while (fe + static_cast<long long>(n) <= config.max_function_evaluations) {
        ++iteration;
        // Trials are generated against the frozen start-of-iteration population;
        // survivors are staged so later candidates never see this iteration's
        // replacements.
        std::vector<candidate> next;
        next.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<double> position = config.algo == algorithm::bmr
                                               ? bmr_trial(k, pop, problem.box, rng)
                                               : bwr_trial(k, pop, problem.box, rng);
            candidate trial = evaluate_candidate(problem, std::move(position),
                                                 config.penalty_weight, config.equality_tolerance);
            note_evaluation(trial);
            next.push_back(greedy_select(pop.members[k], trial, s));
        }
        pop.members = std::move(next);
        pop.refresh_roles(s);
        record(iteration);
    }

    result.best = pop.members[pop.best_index];
    result.fe_used = fe;
    return result;
}

}  // namespace bmrbwr
