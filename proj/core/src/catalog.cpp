#include "bmrbwr/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "catalog_detail.hpp"

namespace bmrbwr {

namespace {

const std::vector<std::string>& unconstrained_names() {
    static const std::vector<std::string> names = {
        "sphere",        "sumsquares",    "beale",          "easom",
        "matyas",        "colville",      "trid-6",         "trid-10",
        "zakharov",      "schwefel-1.2",  "rosenbrock",     "dixon-price",
        "branin",        "bohachevsky-1", "bohachevsky-2",  "bohachevsky-3",
        "booth",         "michalewicz-2", "michalewicz-5",  "goldstein-price",
        "perm",          "ackley",        "foxholes",       "hartmann-3",
        "penalized-2"};
    return names;
}

const std::vector<std::string>& engineering_names() {
    static const std::vector<std::string> names = {
        "welded-beam",    "three-bar-truss", "cantilever-beam",
        "gear-train",     "tension-compression-spring", "pressure-vessel",
        "speed-reducer",  "i-beam-deflection", "tubular-column",
        "piston-lever",   "corrugated-bulkhead", "car-side-impact"};
    return names;
}

// Names held for newer benchmark families that ship no built-in formulation.
const std::set<std::string>& reserved_names() {
    static const std::set<std::string> names = {
        "yang-complex-noisy", "yang-non-differentiable", "yang-hyperboloid",
        "yang-non-smooth-multi-layered", "yang-shortest-path"};
    return names;
}

const std::vector<detail::catalog_family>& families() {
    static const std::vector<detail::catalog_family> rows = [] {
        std::vector<detail::catalog_family> out;
        detail::register_unconstrained(out);
        detail::register_engineering(out);
        return out;
    }();
    return rows;
}

const std::map<std::string, const detail::catalog_family*>& family_index() {
    static const std::map<std::string, const detail::catalog_family*> index = [] {
        std::map<std::string, const detail::catalog_family*> out;
        for (const detail::catalog_family& row : families()) out[row.name] = &row;
        return out;
    }();
    return index;
}

[[noreturn]] void throw_unknown(const std::string& kind, const std::string& name,
                                const std::vector<std::string>& available) {
    std::ostringstream message;
    message << "unknown " << kind << " '" << name << "'; available: ";
    for (std::size_t i = 0; i < available.size(); ++i) {
        if (i) message << ", ";
        message << available[i];
    }
    throw unknown_problem_error(message.str());
}

// Resolves a name to its registry row and dimension: exact canonical name
// first, then "<family>-<digits>" against a scalable family.
std::pair<const detail::catalog_family*, std::size_t> resolve(const std::string& name) {
    const auto& index = family_index();
    const auto exact = index.find(name);
    if (exact != index.end() && exact->second->default_dimension > 0)
        return {exact->second, exact->second->default_dimension};

    const std::size_t dash = name.rfind('-');
    if (dash != std::string::npos && dash + 1 < name.size()) {
        const std::string suffix = name.substr(dash + 1);
        const bool numeric = std::all_of(suffix.begin(), suffix.end(), [](unsigned char c) {
            return std::isdigit(c);
        });
        if (numeric) {
            const auto family = index.find(name.substr(0, dash));
            if (family != index.end() && family->second->scalable) {
                std::size_t dim = 0;
                try {
                    dim = std::stoul(suffix);
                } catch (const std::exception&) {
                    throw unknown_problem_error("'" + name + "' has an unusable dimension suffix");
                }
                if (dim < family->second->min_dimension)
                    throw unknown_problem_error(
                        "'" + name + "' needs at least " +
                        std::to_string(family->second->min_dimension) + " variables");
                return {family->second, dim};
            }
        }
    }

    if (reserved_names().count(name))
        throw std::runtime_error("'" + name +
                                 "' is a reserved name with no built-in formulation; "
                                 "supply one via a problem definition file");
    throw_unknown("problem", name, catalog_names());
}

}  // namespace

problem_spec lookup(const std::string& name) {
    const auto [family, dim] = resolve(name);
    return family->build(dim);
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out = unconstrained_names();
        const auto& eng = engineering_names();
        out.insert(out.end(), eng.begin(), eng.end());
        return out;
    }();
    return names;
}

std::optional<std::vector<double>> known_witness(const std::string& name) {
    const auto [family, dim] = resolve(name);
    if (!family->witness) return std::nullopt;
    return family->witness(dim);
}

long long default_budget(const problem_spec& problem) {
    static const std::set<std::string> engineering(engineering_names().begin(),
                                                   engineering_names().end());
    if (engineering.count(problem.name) || problem.constrained())
        return problem.dimension <= 10 ? 100000 : 200000;
    return 500000;
}

const std::vector<std::string>& suite(const std::string& suite_name) {
    if (suite_name == "unconstrained-25") return unconstrained_names();
    if (suite_name == "engineering-12") return engineering_names();
    throw_unknown("suite", suite_name, suite_names());
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"unconstrained-25", "engineering-12"};
    return names;
}

}  // namespace bmrbwr
