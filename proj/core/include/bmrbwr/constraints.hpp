#pragma once

#include <functional>
#include <vector>

namespace bmrbwr {

enum class sense { minimize, maximize };

using constraint_fn = std::function<double(const std::vector<double>&)>;

/// Inequalities are g(x) <= 0, equalities h(x) = 0.
struct constraint_set {
    std::vector<constraint_fn> inequalities;
    std::vector<constraint_fn> equalities;

    std::size_t size() const { return inequalities.size() + equalities.size(); }
    bool empty() const { return inequalities.empty() && equalities.empty(); }
};

struct violation_report {
    std::vector<double> per_constraint;  // q inequality entries then r equality entries
    double mean_violation = 0.0;
};

/// Static penalty: minimize -> objective + weight * (sum max(0,g)^2 + sum h^2),
/// maximize -> objective - the same sum. Equalities are penalized with raw h^2;
/// the metric tolerance does not apply here. Throws std::invalid_argument on
/// non-finite inputs or weight <= 0.
double penalize(double objective, const std::vector<double>& g_values,
                const std::vector<double>& h_values, double weight, sense s);

/// Metric violations: max(0, g) per inequality, max(0, |h| - eps) per equality,
/// mean over all q + r constraints (0 when there are none).
violation_report violations(const std::vector<double>& g_values,
                            const std::vector<double>& h_values, double eps);

/// True iff every per-constraint entry is exactly zero.
bool is_feasible(const violation_report& report);

}  // namespace bmrbwr
