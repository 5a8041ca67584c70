#include "bmrbwr/problem_file.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "bmrbwr/expression.hpp"

namespace bmrbwr {

namespace {

std::string trim(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(begin, end - begin);
}

double parse_double(const std::string& text, const std::string& context) {
    try {
        std::size_t used = 0;
        const double value = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw problem_file_error(context + ": malformed number '" + text + "'");
    }
}

std::vector<double> parse_number_list(const std::string& text, const std::string& context) {
    std::string normalized = text;
    for (char& c : normalized)
        if (c == ',') c = ' ';
    std::istringstream in(normalized);
    std::vector<double> values;
    std::string token;
    while (in >> token) values.push_back(parse_double(token, context));
    if (values.empty()) throw problem_file_error(context + ": expected at least one number");
    return values;
}

// Accumulates one definition's lines, then builds the problem_spec once the
// definition is complete.
struct definition_builder {
    std::string name;
    std::size_t line = 0;
    std::optional<std::size_t> dimension;
    sense opt_sense = sense::minimize;
    std::optional<std::vector<double>> lower;
    std::optional<std::vector<double>> upper;
    std::optional<std::string> objective_text;
    std::vector<std::string> inequality_texts;
    std::vector<std::string> equality_texts;
    std::optional<double> known_best;

    std::string where() const { return name + " (line " + std::to_string(line) + ")"; }

    std::vector<double> resolve_bounds(const std::optional<std::vector<double>>& values,
                                       const char* key) const {
        if (!values) throw problem_file_error(where() + ": missing '" + key + "'");
        if (values->size() == 1) return std::vector<double>(*dimension, values->front());
        if (values->size() != *dimension)
            throw problem_file_error(where() + ": '" + key + "' has " +
                                     std::to_string(values->size()) + " values for dimension " +
                                     std::to_string(*dimension));
        return *values;
    }

    problem_spec build() const {
        if (!dimension) throw problem_file_error(where() + ": missing 'dimension'");
        if (!objective_text) throw problem_file_error(where() + ": missing 'objective'");

        problem_spec spec;
        spec.name = name;
        spec.dimension = *dimension;
        spec.opt_sense = opt_sense;
        spec.box.lower = resolve_bounds(lower, "lower");
        spec.box.upper = resolve_bounds(upper, "upper");
        try {
            spec.box.validate();
        } catch (const std::invalid_argument& error) {
            throw problem_file_error(where() + ": " + error.what());
        }
        spec.known_best = known_best;
        spec.source_note = "user definition file";

        auto compile = [this](const std::string& text, const char* key) {
            try {
                return expression::parse(text, *dimension);
            } catch (const expression_error& error) {
                throw problem_file_error(where() + ": bad " + key + ": " + error.what());
            }
        };
        spec.objective = [expr = compile(*objective_text, "objective")](
                             const std::vector<double>& x) { return expr.evaluate(x); };
        for (const std::string& text : inequality_texts)
            spec.constraints.inequalities.push_back(
                [expr = compile(text, "inequality")](const std::vector<double>& x) {
                    return expr.evaluate(x);
                });
        for (const std::string& text : equality_texts)
            spec.constraints.equalities.push_back(
                [expr = compile(text, "equality")](const std::vector<double>& x) {
                    return expr.evaluate(x);
                });
        return spec;
    }
};

}  // namespace

std::vector<problem_spec> parse_problem_definitions(const std::string& text) {
    std::istringstream in(text);
    std::vector<problem_spec> problems;
    std::optional<definition_builder> current;
    std::string line;
    std::size_t line_number = 0;

    auto flush = [&]() {
        if (current) problems.push_back(current->build());
        current.reset();
    };

    while (std::getline(in, line)) {
        ++line_number;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;

        const std::size_t colon = stripped.find(':');
        if (colon == std::string::npos)
            throw problem_file_error("line " + std::to_string(line_number) +
                                     ": expected 'key: value', got '" + stripped + "'");
        const std::string key = trim(stripped.substr(0, colon));
        const std::string value = trim(stripped.substr(colon + 1));
        if (value.empty())
            throw problem_file_error("line " + std::to_string(line_number) + ": empty value for '" +
                                     key + "'");

        if (key == "name") {
            flush();
            current.emplace();
            current->name = value;
            current->line = line_number;
            continue;
        }
        if (!current)
            throw problem_file_error("line " + std::to_string(line_number) + ": '" + key +
                                     "' before any 'name'");

        if (key == "dimension") {
            const double raw = parse_double(value, current->where());
            if (raw < 1 || raw != static_cast<double>(static_cast<std::size_t>(raw)))
                throw problem_file_error(current->where() + ": dimension must be a positive integer");
            current->dimension = static_cast<std::size_t>(raw);
        } else if (key == "sense") {
            if (value == "minimize")
                current->opt_sense = sense::minimize;
            else if (value == "maximize")
                current->opt_sense = sense::maximize;
            else
                throw problem_file_error(current->where() +
                                         ": sense must be 'minimize' or 'maximize'");
        } else if (key == "lower") {
            current->lower = parse_number_list(value, current->where());
        } else if (key == "upper") {
            current->upper = parse_number_list(value, current->where());
        } else if (key == "objective") {
            current->objective_text = value;
        } else if (key == "inequality") {
            current->inequality_texts.push_back(value);
        } else if (key == "equality") {
            current->equality_texts.push_back(value);
        } else if (key == "known_best") {
            current->known_best = parse_double(value, current->where());
        } else {
            throw problem_file_error("line " + std::to_string(line_number) + ": unknown key '" +
                                     key + "'");
        }
    }
    flush();
    if (problems.empty()) throw problem_file_error("no problem definitions found");
    return problems;
}

std::vector<problem_spec> load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw problem_file_error("cannot open problem file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_problem_definitions(buffer.str());
}

}  // namespace bmrbwr
