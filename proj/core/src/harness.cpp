#include "bmrbwr/harness.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <stdexcept>
#include <thread>

#include "bmrbwr/random.hpp"

namespace bmrbwr {

summary_stats summarize(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("summarize: empty value list");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();

    summary_stats stats;
    stats.best = values.front();
    stats.worst = values.back();
    stats.median = n % 2 == 1 ? values[n / 2]
                              : 0.5 * (values[n / 2 - 1] + values[n / 2]);
    double sum = 0.0;
    for (double v : values) sum += v;
    stats.mean = sum / static_cast<double>(n);
    double variance = 0.0;
    for (double v : values) variance += (v - stats.mean) * (v - stats.mean);
    stats.std_dev = std::sqrt(variance / static_cast<double>(n));
    return stats;
}

double mfe(const std::vector<run_result>& results, long long budget) {
    if (results.empty()) return 0.0;
    double total = 0.0;
    for (const run_result& r : results)
        total += static_cast<double>(r.fe_to_success.value_or(budget));
    return total / static_cast<double>(results.size());
}

experiment_result run_experiment(const problem_spec& problem, const run_config& config,
                                 int n_runs, unsigned long long base_seed,
                                 unsigned threads) {
    if (n_runs < 1) throw std::invalid_argument("run_experiment: n_runs must be at least 1");
    config.validate();

    std::vector<run_result> runs(static_cast<std::size_t>(n_runs));
    std::vector<std::exception_ptr> failures(runs.size());

    auto execute = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < runs.size(); i += stride) {
            try {
                seeded_stream rng(base_seed + i);
                runs[i] = run(problem, config, rng);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(threads, runs.size()));
    if (workers == 1) {
        execute(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(execute, w, workers);
        for (std::thread& t : pool) t.join();
    }

    for (std::size_t i = 0; i < failures.size(); ++i) {
        if (!failures[i]) continue;
        try {
            std::rethrow_exception(failures[i]);
        } catch (const std::exception& error) {
            throw std::runtime_error("run " + std::to_string(i) + " (seed " +
                                     std::to_string(base_seed + i) + ") failed: " +
                                     error.what());
        }
    }

    std::vector<double> objectives;
    objectives.reserve(runs.size());
    for (const run_result& r : runs)
        if (r.best.feasible()) objectives.push_back(r.best.objective);
    // No run ended on a feasible point: report over everything rather than
    // leave the objective columns undefined.
    if (objectives.empty())
        for (const run_result& r : runs) objectives.push_back(r.best.objective);

    const summary_stats stats = summarize(std::move(objectives));
    experiment_result result;
    result.summary.problem = problem.name;
    result.summary.algo = config.algo;
    result.summary.n_runs = n_runs;
    result.summary.best = stats.best;
    result.summary.median = stats.median;
    result.summary.mean = stats.mean;
    result.summary.worst = stats.worst;
    result.summary.std_dev = stats.std_dev;

    const double runs_d = static_cast<double>(runs.size());
    double feasible = 0.0, succeeded = 0.0, violation = 0.0;
    for (const run_result& r : runs) {
        if (r.found_feasible) feasible += 1.0;
        if (r.fe_to_success) succeeded += 1.0;
        if (!r.best.violations.empty()) {
            double sum = 0.0;
            for (double v : r.best.violations) sum += v;
            violation += sum / static_cast<double>(r.best.violations.size());
        }
    }
    result.summary.feasibility_rate = 100.0 * feasible / runs_d;
    result.summary.success_rate = 100.0 * succeeded / runs_d;
    result.summary.mean_violation = violation / runs_d;
    result.summary.mfe = mfe(runs, config.max_function_evaluations);
    result.runs = std::move(runs);
    return result;
}

std::string to_string(criterion c) {
    switch (c) {
        case criterion::best: return "best";
        case criterion::median: return "median";
        case criterion::mean: return "mean";
        case criterion::worst: return "worst";
        case criterion::std_dev: return "std_dev";
        case criterion::fr: return "fr";
        case criterion::mv: return "mv";
        case criterion::sr: return "sr";
        case criterion::mfe: return "mfe";
    }
    throw std::logic_error("unhandled criterion");
}

criterion criterion_from_string(const std::string& name) {
    static const std::map<std::string, criterion> table = {
        {"best", criterion::best}, {"median", criterion::median}, {"mean", criterion::mean},
        {"worst", criterion::worst}, {"std_dev", criterion::std_dev}, {"fr", criterion::fr},
        {"mv", criterion::mv}, {"sr", criterion::sr}, {"mfe", criterion::mfe}};
    const auto found = table.find(name);
    if (found == table.end())
        throw std::invalid_argument("unknown comparison criterion '" + name + "'");
    return found->second;
}

namespace {

double field(const experiment_summary& s, criterion c) {
    switch (c) {
        case criterion::best: return s.best;
        case criterion::median: return s.median;
        case criterion::mean: return s.mean;
        case criterion::worst: return s.worst;
        case criterion::std_dev: return s.std_dev;
        case criterion::fr: return s.feasibility_rate;
        case criterion::mv: return s.mean_violation;
        case criterion::sr: return s.success_rate;
        case criterion::mfe: return s.mfe;
    }
    throw std::logic_error("unhandled criterion");
}

bool larger_is_better(criterion c) { return c == criterion::fr || c == criterion::sr; }

}  // namespace

comparison_matrix compare(const std::vector<experiment_summary>& candidate,
                          const std::vector<experiment_summary>& baseline,
                          const std::vector<criterion>& criteria, double tolerance) {
    if (!(tolerance >= 0.0)) throw std::invalid_argument("compare: tolerance must be >= 0");

    auto index_by_problem = [](const std::vector<experiment_summary>& side,
                               const char* label) {
        std::map<std::string, const experiment_summary*> index;
        for (const experiment_summary& s : side)
            if (!index.emplace(s.problem, &s).second)
                throw std::invalid_argument(std::string("compare: duplicate problem '") +
                                            s.problem + "' on " + label + " side");
        return index;
    };
    const auto a_index = index_by_problem(candidate, "candidate");
    const auto b_index = index_by_problem(baseline, "baseline");
    if (a_index.size() != b_index.size())
        throw std::invalid_argument("compare: sides cover different problem sets");
    for (const auto& [name, summary] : a_index)
        if (!b_index.count(name))
            throw std::invalid_argument("compare: baseline side is missing problem '" + name +
                                        "'");
    if (a_index.empty()) throw std::invalid_argument("compare: no problems to compare");

    comparison_matrix matrix;
    for (const criterion c : criteria) {
        criterion_counts counts;
        counts.which = c;
        for (const auto& [name, a_summary] : a_index) {
            const double a = field(*a_summary, c);
            const double b = field(*b_index.at(name), c);
            const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
            if (std::fabs(a - b) <= tolerance * scale) {
                ++counts.similar;
            } else if ((a < b) != larger_is_better(c)) {
                ++counts.better;
            } else {
                ++counts.inferior;
            }
        }
        counts.success_percent =
            100.0 * static_cast<double>(counts.better + counts.similar) /
            static_cast<double>(a_index.size());
        matrix.rows.push_back(counts);
    }
    return matrix;
}

}  // namespace bmrbwr
