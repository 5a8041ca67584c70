#include "bmrbwr/constraints.hpp"

#include <cmath>
#include <stdexcept>

namespace bmrbwr {

double penalize(double objective, const std::vector<double>& g_values,
                const std::vector<double>& h_values, double weight, sense s) {
    if (!(weight > 0.0)) throw std::invalid_argument("penalize: weight must be positive");
    if (!std::isfinite(objective)) throw std::invalid_argument("penalize: non-finite objective");
    double sum = 0.0;
    for (double g : g_values) {
        if (!std::isfinite(g)) throw std::invalid_argument("penalize: non-finite inequality value");
        double v = std::max(0.0, g);
        sum += v * v;
    }
    for (double h : h_values) {
        if (!std::isfinite(h)) throw std::invalid_argument("penalize: non-finite equality value");
        sum += h * h;
    }
    return s == sense::minimize ? objective + weight * sum : objective - weight * sum;
}

violation_report violations(const std::vector<double>& g_values,
                            const std::vector<double>& h_values, double eps) {
    if (!(eps >= 0.0)) throw std::invalid_argument("violations: eps must be nonnegative");
    violation_report report;
    report.per_constraint.reserve(g_values.size() + h_values.size());
    double total = 0.0;
    for (double g : g_values) {
        double v = std::max(0.0, g);
        report.per_constraint.push_back(v);
        total += v;
    }
    for (double h : h_values) {
        double v = std::max(0.0, std::fabs(h) - eps);
        report.per_constraint.push_back(v);
        total += v;
    }
    report.mean_violation =
        report.per_constraint.empty() ? 0.0 : total / static_cast<double>(report.per_constraint.size());
    return report;
}

bool is_feasible(const violation_report& report) {
    for (double v : report.per_constraint)
        if (v != 0.0) return false;
    return true;
}

}  // namespace bmrbwr
