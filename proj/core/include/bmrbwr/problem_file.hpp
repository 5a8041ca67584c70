#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bmrbwr/problem.hpp"

namespace bmrbwr {

// Raised for structural defects in a problem definition file.
class problem_file_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parses problem definitions from `key: value` text.
//
// Each definition starts with a `name:` line; later keys apply to the most
// recent name. Lines starting with '#' and blank lines are ignored.
//   name: my-problem          starts a new definition
//   dimension: 2              number of variables (required before bounds
//                             and expressions)
//   sense: minimize|maximize  optional, default minimize
//   lower: -5 -5              one value per variable, or a single value
//   upper: 5                  broadcast to every variable
//   objective: x1^2 + x2^2    expression over x1..xm (see expression.hpp)
//   inequality: x1 + x2 - 1   optional, repeatable; constraint g(x) <= 0
//   equality: x1 - x2         optional, repeatable; constraint h(x) = 0
//   known_best: 0             optional target objective value
// Values in `lower`/`upper` lists may be separated by spaces or commas.
std::vector<problem_spec> parse_problem_definitions(const std::string& text);

// Reads the file and forwards to parse_problem_definitions. Throws
// problem_file_error when the file cannot be opened.
std::vector<problem_spec> load_problem_file(const std::string& path);

}  // namespace bmrbwr
