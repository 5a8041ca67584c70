#include "bmrbwr/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bmrbwr {

namespace {

std::string format_real(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

// std::stod reports subnormal results as out of range; strtod hands back the
// nearest representable value instead, which keeps 17-digit round-trips
// lossless down to the smallest denormals.
double parse_real(const std::string& field) {
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(field.c_str(), &end);
    if (end == field.c_str() || *end != '\0')
        throw std::invalid_argument("unparsable real");
    if (errno == ERANGE && std::abs(value) >= 1.0)
        throw std::out_of_range("out of double range");
    return value;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw io_error("write to '" + path + "' failed");
}

}  // namespace

std::vector<trace_row> trace_rows(const std::vector<run_result>& runs) {
    std::vector<trace_row> rows;
    for (std::size_t run_id = 0; run_id < runs.size(); ++run_id)
        for (const iteration_record& record : runs[run_id].trace)
            rows.push_back({static_cast<long long>(run_id), record.iteration,
                            record.fe_count, record.best_penalized,
                            record.mean_penalized});
    return rows;
}

std::string trace_csv(const std::vector<trace_row>& rows) {
    std::ostringstream out;
    out << "run_id,iteration,fe_count,best_penalized,mean_penalized\n";
    for (const trace_row& row : rows)
        out << row.run_id << ',' << row.iteration << ',' << row.fe_count << ','
            << format_real(row.best_penalized) << ',' << format_real(row.mean_penalized)
            << '\n';
    return out.str();
}

void export_trace_csv(const std::vector<trace_row>& rows, const std::string& path) {
    write_file(path, trace_csv(rows));
}

std::vector<trace_row> parse_trace_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "run_id,iteration,fe_count,best_penalized,mean_penalized")
        throw io_error("trace CSV: missing or unexpected header");

    std::vector<trace_row> rows;
    std::size_t line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        std::istringstream fields(line);
        trace_row row;
        std::string field;
        auto next = [&](const char* what) {
            if (!std::getline(fields, field, ','))
                throw io_error("trace CSV line " + std::to_string(line_number) + ": missing " +
                               what);
            return field;
        };
        try {
            row.run_id = std::stoll(next("run_id"));
            row.iteration = std::stoll(next("iteration"));
            row.fe_count = std::stoll(next("fe_count"));
            row.best_penalized = parse_real(next("best_penalized"));
            row.mean_penalized = parse_real(next("mean_penalized"));
        } catch (const std::exception&) {
            throw io_error("trace CSV line " + std::to_string(line_number) +
                           ": malformed value '" + field + "'");
        }
        if (std::getline(fields, field, ','))
            throw io_error("trace CSV line " + std::to_string(line_number) + ": extra field '" +
                           field + "'");
        rows.push_back(row);
    }
    return rows;
}

std::vector<trace_row> import_trace_csv(const std::string& path) {
    try {
        return parse_trace_csv(read_file(path));
    } catch (const io_error& error) {
        throw io_error(std::string(error.what()) + " [" + path + "]");
    }
}

std::string summaries_json(const std::vector<experiment_summary>& summaries,
                           const run_config& config, unsigned long long base_seed) {
    nlohmann::json out = nlohmann::json::array();
    for (const experiment_summary& s : summaries) {
        nlohmann::json entry = {
            {"problem", s.problem},
            {"algorithm", to_string(s.algo)},
            {"n_runs", s.n_runs},
            {"best", s.best},
            {"median", s.median},
            {"mean", s.mean},
            {"worst", s.worst},
            {"std_dev", s.std_dev},
            {"fr", s.feasibility_rate},
            {"mv", s.mean_violation},
            {"sr", s.success_rate},
            {"mfe", s.mfe},
            {"base_seed", base_seed},
            {"config",
             {{"population_size", config.population_size},
              {"max_function_evaluations", config.max_function_evaluations},
              {"penalty_weight", config.penalty_weight},
              {"equality_tolerance", config.equality_tolerance},
              {"success_tolerance", config.success_tolerance}}},
        };
        out.push_back(std::move(entry));
    }
    return out.dump(2) + "\n";
}

void export_summaries_json(const std::vector<experiment_summary>& summaries,
                           const run_config& config, unsigned long long base_seed,
                           const std::string& path) {
    write_file(path, summaries_json(summaries, config, base_seed));
}

std::vector<experiment_summary> parse_summaries_json(const std::string& text) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& error) {
        throw io_error(std::string("summary JSON: ") + error.what());
    }
    if (!parsed.is_array()) throw io_error("summary JSON: expected a top-level array");

    std::vector<experiment_summary> summaries;
    for (const nlohmann::json& entry : parsed) {
        try {
            experiment_summary s;
            s.problem = entry.at("problem").get<std::string>();
            s.algo = algorithm_from_string(entry.at("algorithm").get<std::string>());
            s.n_runs = entry.at("n_runs").get<int>();
            s.best = entry.at("best").get<double>();
            s.median = entry.at("median").get<double>();
            s.mean = entry.at("mean").get<double>();
            s.worst = entry.at("worst").get<double>();
            s.std_dev = entry.at("std_dev").get<double>();
            s.feasibility_rate = entry.at("fr").get<double>();
            s.mean_violation = entry.at("mv").get<double>();
            s.success_rate = entry.at("sr").get<double>();
            s.mfe = entry.at("mfe").get<double>();
            summaries.push_back(std::move(s));
        } catch (const io_error&) {
            throw;
        } catch (const std::exception& error) {
            // Covers both missing/ill-typed fields and unknown algorithm names.
            throw io_error(std::string("summary JSON entry ") +
                           std::to_string(summaries.size()) + ": " + error.what());
        }
    }
    return summaries;
}

std::vector<experiment_summary> import_summaries_json(const std::string& path) {
    try {
        return parse_summaries_json(read_file(path));
    } catch (const io_error& error) {
        throw io_error(std::string(error.what()) + " [" + path + "]");
    }
}

}  // namespace bmrbwr
