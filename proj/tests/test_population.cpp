#include "doctest.h"

#include <cmath>
#include <limits>

#include "bmrbwr/catalog.hpp"
#include "bmrbwr/population.hpp"

using namespace bmrbwr;

namespace {

problem_spec sphere2() { return lookup("sphere-2"); }

candidate make(double position_value, double penalized) {
    candidate c;
    c.position = {position_value};
    c.objective = penalized;
    c.penalized = penalized;
    return c;
}

}  // namespace

TEST_CASE("evaluate_candidate reproduces hand-computed sphere values") {
    const problem_spec problem = sphere2();
    const candidate a = evaluate_candidate(problem, {-5.0, 18.0}, 10.0, 1e-4);
    CHECK(a.objective == 349.0);
    CHECK(a.penalized == 349.0);
    CHECK(a.violations.empty());
    CHECK(a.feasible());

    const candidate b = evaluate_candidate(problem, {7.0, -12.0}, 10.0, 1e-4);
    CHECK(b.objective == 193.0);
    CHECK(b.penalized == 193.0);
}

TEST_CASE("evaluate_candidate carries constraint violations into the fitness") {
    problem_spec problem = sphere2();
    problem.constraints.inequalities.push_back(
        [](const std::vector<double>& x) { return x[0]; });  // x0 <= 0
    const candidate bad = evaluate_candidate(problem, {2.0, 0.0}, 10.0, 1e-4);
    CHECK(bad.objective == 4.0);
    CHECK(bad.penalized == doctest::Approx(4.0 + 10.0 * 4.0));
    REQUIRE(bad.violations.size() == 1);
    CHECK(bad.violations[0] == 2.0);
    CHECK_FALSE(bad.feasible());

    const candidate good = evaluate_candidate(problem, {-2.0, 0.0}, 10.0, 1e-4);
    CHECK(good.penalized == 4.0);
    CHECK(good.feasible());
}

TEST_CASE("a non-finite objective loses unconditionally instead of spreading NaN") {
    problem_spec problem = sphere2();
    problem.objective = [](const std::vector<double>& x) {
        return x[0] == 0.0 ? std::nan("") : x[0];
    };
    const candidate poisoned = evaluate_candidate(problem, {0.0, 0.0}, 10.0, 1e-4);
    CHECK(poisoned.penalized == std::numeric_limits<double>::infinity());
    CHECK_FALSE(poisoned.feasible());

    problem.opt_sense = sense::maximize;
    const candidate poisoned_max = evaluate_candidate(problem, {0.0, 0.0}, 10.0, 1e-4);
    CHECK(poisoned_max.penalized == -std::numeric_limits<double>::infinity());
}

TEST_CASE("better_fitness is strict and sense-aware") {
    CHECK(better_fitness(1.0, 2.0, sense::minimize));
    CHECK_FALSE(better_fitness(2.0, 1.0, sense::minimize));
    CHECK_FALSE(better_fitness(1.0, 1.0, sense::minimize));
    CHECK(better_fitness(2.0, 1.0, sense::maximize));
    CHECK_FALSE(better_fitness(1.0, 1.0, sense::maximize));
}

TEST_CASE("refresh_roles picks best and worst with ties going to the lowest index") {
    population pop;
    pop.members = {make(0.0, 5.0), make(1.0, 2.0), make(2.0, 2.0), make(3.0, 5.0)};
    pop.refresh_roles(sense::minimize);
    CHECK(pop.best_index == 1);   // 2.0 appears at indexes 1 and 2
    CHECK(pop.worst_index == 0);  // 5.0 appears at indexes 0 and 3
    REQUIRE(pop.mean_position.size() == 1);
    CHECK(pop.mean_position[0] == doctest::Approx(1.5));

    pop.refresh_roles(sense::maximize);
    CHECK(pop.best_index == 0);
    CHECK(pop.worst_index == 1);
}
