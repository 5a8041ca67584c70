#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "bmrbwr/catalog.hpp"
#include "bmrbwr/harness.hpp"

using namespace bmrbwr;

namespace {

run_config tiny_config(algorithm algo = algorithm::bmr) {
    run_config config;
    config.population_size = 5;
    config.max_function_evaluations = 50;
    config.algo = algo;
    return config;
}

run_result result_with_success(std::optional<long long> fe_to_success) {
    run_result r;
    r.fe_to_success = fe_to_success;
    return r;
}

experiment_summary summary_named(const std::string& problem, double value) {
    experiment_summary s;
    s.problem = problem;
    s.algo = algorithm::bmr;
    s.n_runs = 30;
    s.best = s.median = s.mean = s.worst = value;
    s.std_dev = 0.0;
    s.feasibility_rate = 100.0;
    s.mean_violation = 0.0;
    s.success_rate = 50.0;
    s.mfe = 1000.0;
    return s;
}

}  // namespace

TEST_CASE("summarize reports order statistics with a population standard deviation") {
    const summary_stats single = summarize({2.74});
    CHECK(single.best == 2.74);
    CHECK(single.median == 2.74);
    CHECK(single.mean == 2.74);
    CHECK(single.worst == 2.74);
    CHECK(single.std_dev == 0.0);

    const summary_stats four = summarize({3.0, 1.0, 4.0, 2.0});
    CHECK(four.best == 1.0);
    CHECK(four.median == 2.5);  // mean of the two central values
    CHECK(four.mean == 2.5);
    CHECK(four.worst == 4.0);
    CHECK(four.std_dev == doctest::Approx(std::sqrt(1.25)));

    CHECK(summarize({0.0, 0.0, 0.0}).std_dev == 0.0);
    CHECK(summarize({5.0, 1.0, 3.0}).median == 3.0);
    CHECK_THROWS_AS(summarize({}), std::invalid_argument);
}

TEST_CASE("mfe charges the full budget to unsuccessful runs") {
    CHECK(mfe({result_with_success(600), result_with_success(800)}, 500000) == 700.0);
    CHECK(mfe({result_with_success(600), result_with_success(std::nullopt)}, 500000) ==
          doctest::Approx((600.0 + 500000.0) / 2.0));
    CHECK(mfe({result_with_success(std::nullopt)}, 500000) == 500000.0);
    CHECK(mfe({result_with_success(5), result_with_success(5)}, 50) == 5.0);
    CHECK(mfe({}, 500000) == 0.0);
}

TEST_CASE("run_experiment seeds run i with base_seed + i") {
    const problem_spec problem = lookup("sphere-2");
    const run_config config = tiny_config();
    const experiment_result batch = run_experiment(problem, config, 3, 7);

    REQUIRE(batch.runs.size() == 3);
    for (int i = 0; i < 3; ++i) {
        seeded_stream rng(7 + static_cast<unsigned long long>(i));
        const run_result manual = run(problem, config, rng);
        CHECK(batch.runs[i].best.penalized == manual.best.penalized);
        CHECK(batch.runs[i].best.position == manual.best.position);
    }
}

TEST_CASE("run_experiment is reproducible and n_runs=1 degenerates cleanly") {
    const problem_spec problem = lookup("sphere-2");
    const experiment_result a = run_experiment(problem, tiny_config(), 1, 42);
    const experiment_result b = run_experiment(problem, tiny_config(), 1, 42);
    CHECK(a.summary.best == b.summary.best);
    CHECK(a.summary.best == a.summary.median);
    CHECK(a.summary.best == a.summary.mean);
    CHECK(a.summary.best == a.summary.worst);
    CHECK(a.summary.std_dev == 0.0);
    CHECK(a.summary.n_runs == 1);
    CHECK(a.summary.problem == "sphere-2");
}

TEST_CASE("worker threads do not change the aggregate") {
    const problem_spec problem = lookup("rosenbrock-3");
    const experiment_result serial = run_experiment(problem, tiny_config(), 6, 0, 1);
    const experiment_result threaded = run_experiment(problem, tiny_config(), 6, 0, 3);
    CHECK(serial.summary.best == threaded.summary.best);
    CHECK(serial.summary.mean == threaded.summary.mean);
    CHECK(serial.summary.std_dev == threaded.summary.std_dev);
    CHECK(serial.summary.mfe == threaded.summary.mfe);
}

TEST_CASE("an always-feasible target within tolerance gives full rates") {
    const problem_spec problem = lookup("sphere-2");
    run_config config = tiny_config();
    config.success_tolerance = 1e9;
    const experiment_summary s = run_experiment(problem, config, 4, 3).summary;
    CHECK(s.feasibility_rate == 100.0);
    CHECK(s.success_rate == 100.0);
    CHECK(s.mean_violation == 0.0);
    CHECK(s.mfe == 1.0);  // the very first evaluation of every run already qualifies
}

TEST_CASE("an unsatisfiable constraint keeps statistics finite but reports the miss") {
    problem_spec problem = lookup("sphere-2");
    problem.constraints.inequalities.push_back(
        [](const std::vector<double>&) { return 1.0; });  // g = 1 > 0 everywhere
    const experiment_summary s = run_experiment(problem, tiny_config(), 3, 0).summary;
    CHECK(s.feasibility_rate == 0.0);
    CHECK(s.success_rate == 0.0);
    CHECK(s.mean_violation > 0.0);
    CHECK(std::isfinite(s.best));
    CHECK(std::isfinite(s.mean));
    CHECK(s.success_rate <= s.feasibility_rate);
}

TEST_CASE("run failures carry the run index and seed") {
    problem_spec problem = lookup("sphere-2");
    problem.objective = [](const std::vector<double>&) -> double {
        throw std::runtime_error("objective exploded");
    };
    try {
        run_experiment(problem, tiny_config(), 2, 5);
        FAIL("expected a propagated run failure");
    } catch (const std::runtime_error& error) {
        const std::string what = error.what();
        CHECK(what.find("run 0") != std::string::npos);
        CHECK(what.find("seed 5") != std::string::npos);
        CHECK(what.find("objective exploded") != std::string::npos);
    }
}

TEST_CASE("criterion names round-trip") {
    for (const criterion c : {criterion::best, criterion::median, criterion::mean,
                              criterion::worst, criterion::std_dev, criterion::fr,
                              criterion::mv, criterion::sr, criterion::mfe})
        CHECK(criterion_from_string(to_string(c)) == c);
    CHECK_THROWS_AS(criterion_from_string("p-value"), std::invalid_argument);
}

TEST_CASE("identical summaries compare as similar on every criterion") {
    std::vector<experiment_summary> side;
    for (const char* name : {"p1", "p2", "p3"}) side.push_back(summary_named(name, 1.5));
    const comparison_matrix matrix =
        compare(side, side,
                {criterion::best, criterion::median, criterion::mean, criterion::worst,
                 criterion::std_dev, criterion::fr, criterion::mv, criterion::sr,
                 criterion::mfe});
    REQUIRE(matrix.rows.size() == 9);
    for (const criterion_counts& row : matrix.rows) {
        CHECK(row.better == 0);
        CHECK(row.similar == 3);
        CHECK(row.inferior == 0);
        CHECK(row.better + row.similar + row.inferior == 3);
        CHECK(row.success_percent == 100.0);
    }
}

TEST_CASE("a strict improvement counts as better on every criterion") {
    experiment_summary a = summary_named("p", 1.0);
    experiment_summary b = summary_named("p", 2.0);
    a.std_dev = 0.1;
    b.std_dev = 0.2;
    a.feasibility_rate = 100.0;
    b.feasibility_rate = 90.0;
    a.success_rate = 80.0;
    b.success_rate = 40.0;
    a.mean_violation = 0.0;
    b.mean_violation = 0.5;
    a.mfe = 500.0;
    b.mfe = 900.0;

    const std::vector<criterion> all = {criterion::best, criterion::median,
                                        criterion::mean, criterion::worst,
                                        criterion::std_dev, criterion::fr, criterion::mv,
                                        criterion::sr, criterion::mfe};
    const comparison_matrix forward = compare({a}, {b}, all);
    for (const criterion_counts& row : forward.rows) {
        CAPTURE(to_string(row.which));
        CHECK(row.better == 1);
        CHECK(row.success_percent == 100.0);
    }
    const comparison_matrix backward = compare({b}, {a}, all);
    for (const criterion_counts& row : backward.rows) {
        CHECK(row.inferior == 1);
        CHECK(row.success_percent == 0.0);
    }
}

TEST_CASE("similarity uses a relative tolerance with an absolute floor") {
    // Differences below tolerance * max(1, |a|, |b|) are similar: float dust
    // around zero does not produce a ranking.
    experiment_summary a = summary_named("p", 1e-90);
    experiment_summary b = summary_named("p", 1e-130);
    CHECK(compare({a}, {b}, {criterion::best}).rows[0].similar == 1);

    a.best = 1e9;
    b.best = 1e9 + 100.0;  // within 1e-6 relative at this scale
    CHECK(compare({a}, {b}, {criterion::best}).rows[0].similar == 1);

    b.best = 2e9;
    CHECK(compare({a}, {b}, {criterion::best}).rows[0].better == 1);

    a.best = 0.5;
    b.best = 0.5 + 2e-6;  // above the floor: 2e-6 > 1e-6 * 1.0
    CHECK(compare({a}, {b}, {criterion::best}).rows[0].better == 1);
    CHECK(compare({a}, {b}, {criterion::best}, 1e-5).rows[0].similar == 1);
}

TEST_CASE("compare rejects mismatched or duplicated problem sets") {
    const experiment_summary p1 = summary_named("p1", 1.0);
    const experiment_summary p2 = summary_named("p2", 1.0);
    CHECK_THROWS_AS(compare({p1}, {p2}, {criterion::best}), std::invalid_argument);
    CHECK_THROWS_AS(compare({p1, p2}, {p1}, {criterion::best}), std::invalid_argument);
    CHECK_THROWS_AS(compare({p1, p1}, {p1, p1}, {criterion::best}), std::invalid_argument);
    CHECK_NOTHROW(compare({p2, p1}, {p1, p2}, {criterion::best}));  // order-insensitive
}
