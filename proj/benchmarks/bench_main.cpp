// Microbenchmarks for the hot paths: trial-vector generation, catalog
// objective evaluations, and the full budgeted run loop.

#include <benchmark/benchmark.h>

#include <vector>

#include "bmrbwr/catalog.hpp"
#include "bmrbwr/optimizer.hpp"

namespace {

using namespace bmrbwr;

population make_population(const problem_spec& prob, std::size_t size,
                           std::uint64_t seed) {
    seeded_stream rng(seed);
    run_config config;
    config.population_size = size;
    config.max_function_evaluations = static_cast<long long>(size);
    population pop = initialize_population(prob, config, rng);
    pop.refresh_roles(prob.opt_sense);
    return pop;
}

void bench_trial(benchmark::State& state, algorithm algo) {
    const auto dimension = static_cast<std::size_t>(state.range(0));
    problem_spec prob = lookup(dimension == 30 ? "sphere" : "sphere-2");
    population pop = make_population(prob, 20, 42);
    seeded_stream rng(7);
    std::size_t k = 0;
    for (auto _ : state) {
        std::vector<double> trial = algo == algorithm::bmr
                                        ? bmr_trial(k, pop, prob.box, rng)
                                        : bwr_trial(k, pop, prob.box, rng);
        benchmark::DoNotOptimize(trial.data());
        k = (k + 1) % pop.size();
    }
    state.SetItemsProcessed(state.iterations() * dimension);
}

void bmr_trial_vector(benchmark::State& state) { bench_trial(state, algorithm::bmr); }
void bwr_trial_vector(benchmark::State& state) { bench_trial(state, algorithm::bwr); }

BENCHMARK(bmr_trial_vector)->Arg(2)->Arg(30);
BENCHMARK(bwr_trial_vector)->Arg(2)->Arg(30);

void catalog_objective(benchmark::State& state, const char* name) {
    problem_spec prob = lookup(name);
    std::vector<double> x(prob.dimension);
    seeded_stream rng(3);
    for (std::size_t j = 0; j < prob.dimension; ++j) {
        const double span = prob.box.upper[j] - prob.box.lower[j];
        x[j] = prob.box.lower[j] + span * rng.next_uniform();
    }
    for (auto _ : state) {
        double value = prob.objective(x);
        benchmark::DoNotOptimize(value);
    }
}

void sphere_30_objective(benchmark::State& state) { catalog_objective(state, "sphere"); }
void rosenbrock_30_objective(benchmark::State& state) {
    catalog_objective(state, "rosenbrock");
}
void foxholes_objective(benchmark::State& state) { catalog_objective(state, "foxholes"); }
void welded_beam_objective(benchmark::State& state) {
    catalog_objective(state, "welded-beam");
}

BENCHMARK(sphere_30_objective);
BENCHMARK(rosenbrock_30_objective);
BENCHMARK(foxholes_objective);
BENCHMARK(welded_beam_objective);

void full_run(benchmark::State& state, algorithm algo, const char* name) {
    problem_spec prob = lookup(name);
    run_config config;
    config.algo = algo;
    config.max_function_evaluations = 20000;
    config.record_trace = false;
    std::uint64_t seed = 11;
    for (auto _ : state) {
        seeded_stream rng(seed++);
        run_result result = run(prob, config, rng);
        benchmark::DoNotOptimize(result.best.penalized);
    }
    state.SetItemsProcessed(state.iterations() * config.max_function_evaluations);
}

void bmr_run_sphere_30(benchmark::State& state) {
    full_run(state, algorithm::bmr, "sphere");
}
void bwr_run_sphere_30(benchmark::State& state) {
    full_run(state, algorithm::bwr, "sphere");
}
void bmr_run_welded_beam(benchmark::State& state) {
    full_run(state, algorithm::bmr, "welded-beam");
}

BENCHMARK(bmr_run_sphere_30)->Unit(benchmark::kMillisecond);
BENCHMARK(bwr_run_sphere_30)->Unit(benchmark::kMillisecond);
BENCHMARK(bmr_run_welded_beam)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
