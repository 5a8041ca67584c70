#pragma once

#include <string>
#include <vector>

#include "bmrbwr/optimizer.hpp"

namespace bmrbwr {

// Aggregate statistics for one (problem, algorithm) experiment, mirroring the
// usual benchmark-report columns.
struct experiment_summary {
    std::string problem;
    algorithm algo = algorithm::bmr;
    int n_runs = 0;
    double best = 0.0;
    double median = 0.0;
    double mean = 0.0;
    double worst = 0.0;
    double std_dev = 0.0;
    double feasibility_rate = 0.0;  // % of runs that ever evaluated a feasible point
    double mean_violation = 0.0;    // mean over all runs of the final best's mean violation
    double success_rate = 0.0;      // % of runs that reached the known optimum while feasible
    double mfe = 0.0;               // mean evaluations to success, budget charged on failure
};

struct experiment_result {
    experiment_summary summary;
    std::vector<run_result> runs;  // indexed by run id
};

struct summary_stats {
    double best = 0.0;
    double median = 0.0;
    double mean = 0.0;
    double worst = 0.0;
    double std_dev = 0.0;
};

// Order statistics plus population standard deviation (divide by N); the
// median of an even-length list is the mean of the two central values.
// Throws std::invalid_argument on an empty list.
summary_stats summarize(std::vector<double> values);

// Mean function evaluations to success: runs that never succeeded are charged
// the full budget.
double mfe(const std::vector<run_result>& results, long long budget);

// Executes n_runs independent runs; run i draws from a fresh stream seeded
// base_seed + i (config.seed is ignored here). Objective statistics cover the
// final best objective of runs whose final best is feasible; when no run ends
// feasible they fall back to all runs so the summary stays finite. The
// feasibility rate counts runs that ever evaluated a feasible point.
// `threads` > 1 runs batches concurrently with identical results; run
// failures are rethrown with the run index and seed attached.
experiment_result run_experiment(const problem_spec& problem, const run_config& config,
                                 int n_runs, unsigned long long base_seed,
                                 unsigned threads = 1);

// Comparison criteria: objective statistics, mean violation, and mean
// evaluations count as smaller-is-better; the two rates as larger-is-better.
enum class criterion { best, median, mean, worst, std_dev, fr, mv, sr, mfe };

std::string to_string(criterion c);
criterion criterion_from_string(const std::string& name);

struct criterion_counts {
    criterion which = criterion::best;
    int better = 0;
    int similar = 0;
    int inferior = 0;
    double success_percent = 0.0;  // 100 * (better + similar) / problems
};

struct comparison_matrix {
    std::vector<criterion_counts> rows;  // one per requested criterion
};

// Classifies candidate A against baseline B per problem and criterion.
// Values count as similar-or-equal when |a - b| <= tolerance * max(1, |a|,
// |b|); the absolute floor keeps pairs that differ only in float dust (1e-90
// vs 1e-130) from being ranked. Both sides must cover the same problem set
// exactly once; otherwise std::invalid_argument.
comparison_matrix compare(const std::vector<experiment_summary>& candidate,
                          const std::vector<experiment_summary>& baseline,
                          const std::vector<criterion>& criteria,
                          double tolerance = 1e-6);

}  // namespace bmrbwr
