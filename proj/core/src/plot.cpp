#include "bmrbwr/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace bmrbwr {

namespace {

constexpr double width = 960.0;
constexpr double height = 600.0;
constexpr double margin_left = 90.0;
constexpr double margin_right = 200.0;
constexpr double margin_top = 60.0;
constexpr double margin_bottom = 70.0;

constexpr const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
constexpr std::size_t palette_size = sizeof(palette) / sizeof(palette[0]);

std::string escape_xml(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string coord(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2f", value);
    return buffer;
}

std::string tick_text(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%g", value);
    return buffer;
}

struct axis_range {
    double lo = 0.0;
    double hi = 1.0;
};

axis_range widen(axis_range r) {
    if (r.lo == r.hi) {
        const double pad = r.lo == 0.0 ? 1.0 : std::abs(r.lo) * 0.1;
        r.lo -= pad;
        r.hi += pad;
    }
    return r;
}

}  // namespace

std::string render_line_svg(const std::string& title, const std::string& x_label,
                            const std::string& y_label,
                            const std::vector<plot_series>& series) {
    std::size_t total_points = 0;
    for (const plot_series& s : series) total_points += s.points.size();
    if (total_points == 0) throw std::invalid_argument("plot: no data points to render");

    double x_min = std::numeric_limits<double>::infinity();
    double x_max = -std::numeric_limits<double>::infinity();
    double y_min = std::numeric_limits<double>::infinity();
    double y_max = -std::numeric_limits<double>::infinity();
    bool all_positive = true;
    for (const plot_series& s : series)
        for (const plot_point& p : s.points) {
            x_min = std::min(x_min, p.x);
            x_max = std::max(x_max, p.x);
            y_min = std::min(y_min, p.y);
            y_max = std::max(y_max, p.y);
            if (!(p.y > 0.0)) all_positive = false;
        }

    const bool log_y = all_positive && y_max / y_min > 100.0;

    const axis_range xr = widen({x_min, x_max});
    axis_range yr;
    if (log_y)
        yr = widen({std::log10(y_min), std::log10(y_max)});
    else
        yr = widen({y_min, y_max});

    const double plot_w = width - margin_left - margin_right;
    const double plot_h = height - margin_top - margin_bottom;
    auto to_px_x = [&](double x) {
        return margin_left + (x - xr.lo) / (xr.hi - xr.lo) * plot_w;
    };
    auto to_px_y = [&](double y) {
        const double v = log_y ? std::log10(y) : y;
        return margin_top + plot_h - (v - yr.lo) / (yr.hi - yr.lo) * plot_h;
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
        << "\" fill=\"#ffffff\"/>\n";
    out << "  <text x=\"" << coord(width / 2) << "\" y=\"30\" font-family=\"sans-serif\" "
           "font-size=\"20\" text-anchor=\"middle\">"
        << escape_xml(title) << "</text>\n";

    // Axes.
    const double axis_bottom = margin_top + plot_h;
    out << "  <line x1=\"" << coord(margin_left) << "\" y1=\"" << coord(margin_top)
        << "\" x2=\"" << coord(margin_left) << "\" y2=\"" << coord(axis_bottom)
        << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    out << "  <line x1=\"" << coord(margin_left) << "\" y1=\"" << coord(axis_bottom)
        << "\" x2=\"" << coord(margin_left + plot_w) << "\" y2=\"" << coord(axis_bottom)
        << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";

    // Ticks: five per axis; on a log axis the tick labels show the power of ten.
    for (int i = 0; i <= 4; ++i) {
        const double fx = xr.lo + (xr.hi - xr.lo) * i / 4.0;
        const double px = to_px_x(fx);
        out << "  <line x1=\"" << coord(px) << "\" y1=\"" << coord(axis_bottom) << "\" x2=\""
            << coord(px) << "\" y2=\"" << coord(axis_bottom + 6) << "\" stroke=\"#000000\" "
            << "stroke-width=\"1\"/>\n";
        out << "  <text x=\"" << coord(px) << "\" y=\"" << coord(axis_bottom + 22)
            << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">"
            << tick_text(fx) << "</text>\n";

        const double fy = yr.lo + (yr.hi - yr.lo) * i / 4.0;
        const double py = margin_top + plot_h - (fy - yr.lo) / (yr.hi - yr.lo) * plot_h;
        out << "  <line x1=\"" << coord(margin_left - 6) << "\" y1=\"" << coord(py)
            << "\" x2=\"" << coord(margin_left) << "\" y2=\"" << coord(py)
            << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
        const double label_value = log_y ? std::pow(10.0, fy) : fy;
        out << "  <text x=\"" << coord(margin_left - 10) << "\" y=\"" << coord(py + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">"
            << tick_text(label_value) << "</text>\n";
    }

    out << "  <text x=\"" << coord(margin_left + plot_w / 2) << "\" y=\""
        << coord(height - 15) << "\" font-family=\"sans-serif\" font-size=\"14\" "
           "text-anchor=\"middle\">"
        << escape_xml(x_label) << "</text>\n";
    out << "  <text x=\"22\" y=\"" << coord(margin_top + plot_h / 2)
        << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 22 "
        << coord(margin_top + plot_h / 2) << ")\">"
        << escape_xml(log_y ? y_label + " (log scale)" : y_label) << "</text>\n";

    // Series.
    for (std::size_t i = 0; i < series.size(); ++i) {
        const plot_series& s = series[i];
        const char* color = palette[i % palette_size];
        if (s.points.size() >= 2) {
            out << "  <polyline fill=\"none\" stroke=\"" << color
                << "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t p = 0; p < s.points.size(); ++p) {
                if (p) out << ' ';
                out << coord(to_px_x(s.points[p].x)) << ',' << coord(to_px_y(s.points[p].y));
            }
            out << "\"/>\n";
        } else if (s.points.size() == 1) {
            out << "  <circle cx=\"" << coord(to_px_x(s.points[0].x)) << "\" cy=\""
                << coord(to_px_y(s.points[0].y)) << "\" r=\"4\" fill=\"" << color << "\"/>\n";
        }
    }

    // Legend.
    const double legend_x = margin_left + plot_w + 20;
    double legend_y = margin_top + 10;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const char* color = palette[i % palette_size];
        out << "  <line x1=\"" << coord(legend_x) << "\" y1=\"" << coord(legend_y)
            << "\" x2=\"" << coord(legend_x + 24) << "\" y2=\"" << coord(legend_y)
            << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        out << "  <text x=\"" << coord(legend_x + 30) << "\" y=\"" << coord(legend_y + 4)
            << "\" font-family=\"sans-serif\" font-size=\"13\">" << escape_xml(series[i].label)
            << "</text>\n";
        legend_y += 22;
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace bmrbwr
