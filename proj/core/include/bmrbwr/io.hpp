#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bmrbwr/harness.hpp"

namespace bmrbwr {

// Raised for unreadable, unwritable, or malformed data files; the message
// names the path.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One convergence-trace row; run_id indexes the run within an experiment.
struct trace_row {
    long long run_id = 0;
    long long iteration = 0;
    long long fe_count = 0;
    double best_penalized = 0.0;
    double mean_penalized = 0.0;
};

// Flattens per-run traces into rows in run order.
std::vector<trace_row> trace_rows(const std::vector<run_result>& runs);

// CSV with header `run_id,iteration,fe_count,best_penalized,mean_penalized`;
// reals carry 17 significant digits so import reproduces them bit-exactly.
std::string trace_csv(const std::vector<trace_row>& rows);
void export_trace_csv(const std::vector<trace_row>& rows, const std::string& path);
std::vector<trace_row> parse_trace_csv(const std::string& text);
std::vector<trace_row> import_trace_csv(const std::string& path);

// Summary JSON: an array with one object per (problem, algorithm) carrying
// every summary field plus the run configuration and base seed it came from.
std::string summaries_json(const std::vector<experiment_summary>& summaries,
                           const run_config& config, unsigned long long base_seed);
void export_summaries_json(const std::vector<experiment_summary>& summaries,
                           const run_config& config, unsigned long long base_seed,
                           const std::string& path);
std::vector<experiment_summary> parse_summaries_json(const std::string& text);
std::vector<experiment_summary> import_summaries_json(const std::string& path);

}  // namespace bmrbwr
