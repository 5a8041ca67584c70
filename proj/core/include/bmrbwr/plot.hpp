#pragma once

#include <string>
#include <vector>

namespace bmrbwr {

/// One named line on a chart: points are (x, y) pairs in data space.
struct plot_point {
    double x = 0.0;
    double y = 0.0;
};

struct plot_series {
    std::string label;
    std::vector<plot_point> points;
};

/// Renders series as a self-contained SVG line chart.
///
/// The output is deterministic: identical inputs produce identical bytes, and
/// nothing environment-dependent (timestamps, locales, random ids) is embedded.
/// Each series with two or more points becomes one polyline; a single-point
/// series is drawn as a marker circle. The y axis switches to log scale when
/// every y value is positive and the values span more than two decades, which
/// keeps convergence histories readable.
///
/// Throws std::invalid_argument when no series contains any point.
std::string render_line_svg(const std::string& title, const std::string& x_label,
                            const std::string& y_label,
                            const std::vector<plot_series>& series);

}  // namespace bmrbwr
