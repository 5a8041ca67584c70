#include "doctest.h"

#include <stdexcept>
#include <string>

#include "bmrbwr/plot.hpp"

using namespace bmrbwr;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t at = text.find(needle); at != std::string::npos;
         at = text.find(needle, at + needle.size()))
        ++count;
    return count;
}

std::vector<plot_series> sample_series() {
    plot_series a{"bmr", {{0.0, 100.0}, {1.0, 10.0}, {2.0, 1.0}}};
    plot_series b{"bwr", {{0.0, 90.0}, {1.0, 20.0}, {2.0, 2.0}}};
    plot_series marker{"reference", {{1.0, 5.0}}};
    return {a, b, marker};
}

}  // namespace

TEST_CASE("each multi-point series renders one polyline and markers stay circles") {
    const std::string svg = render_line_svg("Convergence", "iteration", "best", sample_series());
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count_occurrences(svg, "<polyline") == 2);
    CHECK(count_occurrences(svg, "<circle") == 1);
    CHECK(count_occurrences(svg, "<line") >= 2);  // the two axes at minimum
    CHECK(svg.find("Convergence") != std::string::npos);
    CHECK(svg.find("iteration") != std::string::npos);
    CHECK(svg.find("bmr") != std::string::npos);
    CHECK(svg.find("bwr") != std::string::npos);
    CHECK(svg.find("reference") != std::string::npos);
}

TEST_CASE("rendering is deterministic byte for byte") {
    const std::string first = render_line_svg("t", "x", "y", sample_series());
    const std::string second = render_line_svg("t", "x", "y", sample_series());
    CHECK(first == second);
}

TEST_CASE("the y axis goes logarithmic only for wide positive ranges") {
    const std::vector<plot_series> wide = {
        {"s", {{0.0, 1e6}, {1.0, 1e2}, {2.0, 1e-3}}}};
    CHECK(render_line_svg("t", "x", "y", wide).find("log scale") != std::string::npos);

    const std::vector<plot_series> narrow = {{"s", {{0.0, 5.0}, {1.0, 2.0}}}};
    CHECK(render_line_svg("t", "x", "y", narrow).find("log scale") == std::string::npos);

    const std::vector<plot_series> signed_values = {
        {"s", {{0.0, -1.0}, {1.0, 1e6}}}};
    CHECK(render_line_svg("t", "x", "y", signed_values).find("log scale") ==
          std::string::npos);

    const std::vector<plot_series> with_zero = {{"s", {{0.0, 0.0}, {1.0, 1e6}}}};
    CHECK(render_line_svg("t", "x", "y", with_zero).find("log scale") ==
          std::string::npos);
}

TEST_CASE("markup in labels is escaped") {
    const std::vector<plot_series> series = {{"a<b & c", {{0.0, 1.0}, {1.0, 2.0}}}};
    const std::string svg = render_line_svg("x > y", "in<put", "out&put", series);
    CHECK(svg.find("a&lt;b &amp; c") != std::string::npos);
    CHECK(svg.find("x &gt; y") != std::string::npos);
    CHECK(svg.find("a<b") == std::string::npos);
}

TEST_CASE("an empty chart is refused") {
    CHECK_THROWS_AS(render_line_svg("t", "x", "y", {}), std::invalid_argument);
    CHECK_THROWS_AS(render_line_svg("t", "x", "y", {{"empty", {}}}),
                    std::invalid_argument);
}
