#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bmrbwr/problem.hpp"

namespace bmrbwr {

// Raised when a problem or suite name is not registered; the message lists
// every available name.
class unknown_problem_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Resolves a catalog name to an immutable problem definition.
//
// Exact canonical names are tried first (see catalog_names()). A trailing
// "-<digits>" suffix additionally selects the dimension of a scalable family:
// "sphere-2" is the 2-variable sphere, "trid-7" a 7-variable trid. Bare
// scalable names use their standard dimension (30 for sphere, sumsquares,
// zakharov, schwefel-1.2, rosenbrock, dixon-price, ackley, penalized-2).
// A few reserved names are recognized but ship no formulation; looking them
// up explains how to supply one via a problem definition file.
problem_spec lookup(const std::string& name);

// Canonical catalog names: the 25 standard unconstrained functions followed
// by the 12 classical engineering design problems.
const std::vector<std::string>& catalog_names();

// A point whose evaluation reproduces the entry's known_best within 1e-6
// while satisfying every constraint, when the catalog ships one.
std::optional<std::vector<double>> known_witness(const std::string& name);

// Evaluation budget convention: engineering design problems get 1e5 function
// evaluations up to 10 variables and 2e5 above; everything else gets 5e5.
// User-defined problems follow the engineering rule when they carry
// constraints.
long long default_budget(const problem_spec& problem);

// Named suites: "unconstrained-25" and "engineering-12", in catalog order.
const std::vector<std::string>& suite(const std::string& suite_name);
const std::vector<std::string>& suite_names();

}  // namespace bmrbwr
