// Command-line driver for the BMR/BWR optimizers: single experiments, named
// benchmark suites, summary comparisons, and convergence plots.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bmrbwr/catalog.hpp"
#include "bmrbwr/harness.hpp"
#include "bmrbwr/io.hpp"
#include "bmrbwr/optimizer.hpp"
#include "bmrbwr/plot.hpp"
#include "bmrbwr/problem_file.hpp"

namespace {

using namespace bmrbwr;

struct experiment_options {
    std::string algo_list = "bmr";
    int runs = 30;
    std::size_t population = 20;
    long long budget = 0;  // 0 = per-problem default
    unsigned long long seed = 0;
    double penalty_weight = 10.0;
    double equality_tolerance = 1e-4;
    double success_tolerance = 1e-8;
    unsigned threads = 1;
    std::string outdir;
    std::string config_path;

    CLI::Option* budget_opt = nullptr;
    CLI::Option* pop_opt = nullptr;
    CLI::Option* penalty_opt = nullptr;
    CLI::Option* eq_tol_opt = nullptr;
    CLI::Option* success_tol_opt = nullptr;
    CLI::Option* seed_opt = nullptr;
    CLI::Option* runs_opt = nullptr;
};

void add_experiment_options(CLI::App* cmd, experiment_options& opt, bool suite_mode) {
    cmd->add_option("--algo", opt.algo_list,
                    suite_mode ? "Comma-separated algorithms to run (bmr,bwr)"
                               : "Algorithm to run (bmr or bwr)")
        ->capture_default_str();
    opt.runs_opt = cmd->add_option("--runs", opt.runs, "Independent runs per problem")
                       ->capture_default_str();
    opt.pop_opt = cmd->add_option("--pop", opt.population, "Population size")
                      ->capture_default_str();
    opt.budget_opt = cmd->add_option("--budget", opt.budget,
                                     "Function-evaluation budget (default: per-problem)");
    opt.seed_opt = cmd->add_option("--seed", opt.seed, "Base seed; run i uses seed + i")
                       ->capture_default_str();
    opt.penalty_opt = cmd->add_option("--penalty", opt.penalty_weight,
                                      "Static penalty weight for constraints")
                          ->capture_default_str();
    opt.eq_tol_opt = cmd->add_option("--eq-tol", opt.equality_tolerance,
                                     "Equality tolerance for feasibility metrics")
                         ->capture_default_str();
    opt.success_tol_opt =
        cmd->add_option("--success-tol", opt.success_tolerance,
                        "Distance from the known optimum that counts as success")
            ->capture_default_str();
    cmd->add_option("--threads", opt.threads, "Worker threads per experiment")
        ->capture_default_str();
    cmd->add_option("-o,--out", opt.outdir,
                    "Output directory (default: $BMRBWR_OUT or the working directory)");
    cmd->add_option("--config", opt.config_path,
                    "JSON file with defaults for options not given on the command line");
}

// Command-line values win; the config file fills in only untouched options.
void apply_config_file(experiment_options& opt) {
    if (opt.config_path.empty()) return;
    std::ifstream in(opt.config_path);
    if (!in) throw io_error("cannot open config file '" + opt.config_path + "'");
    nlohmann::json cfg;
    try {
        cfg = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& error) {
        throw io_error("config file '" + opt.config_path + "': " + error.what());
    }
    auto take = [&](const char* key, CLI::Option* option, auto& value) {
        if (cfg.contains(key) && (option == nullptr || option->count() == 0))
            value = cfg.at(key).get<std::decay_t<decltype(value)>>();
    };
    take("population_size", opt.pop_opt, opt.population);
    take("max_function_evaluations", opt.budget_opt, opt.budget);
    take("penalty_weight", opt.penalty_opt, opt.penalty_weight);
    take("equality_tolerance", opt.eq_tol_opt, opt.equality_tolerance);
    take("success_tolerance", opt.success_tol_opt, opt.success_tolerance);
    take("seed", opt.seed_opt, opt.seed);
    take("runs", opt.runs_opt, opt.runs);
}

std::string resolve_outdir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("BMRBWR_OUT"); env && *env) return env;
    return ".";
}

std::vector<algorithm> parse_algorithms(const std::string& list) {
    std::vector<algorithm> algos;
    std::stringstream in(list);
    std::string token;
    while (std::getline(in, token, ','))
        if (!token.empty()) algos.push_back(algorithm_from_string(token));
    if (algos.empty()) throw std::invalid_argument("no algorithm given");
    return algos;
}

run_config make_config(const experiment_options& opt, algorithm algo,
                       const problem_spec& problem, bool record_trace) {
    run_config config;
    config.population_size = opt.population;
    config.max_function_evaluations =
        opt.budget > 0 ? opt.budget : default_budget(problem);
    config.algo = algo;
    config.penalty_weight = opt.penalty_weight;
    config.equality_tolerance = opt.equality_tolerance;
    config.success_tolerance = opt.success_tolerance;
    config.record_trace = record_trace;
    config.validate();
    return config;
}

void print_summary_header() {
    std::printf("%-24s %-4s %13s %13s %13s %13s %12s %6s %10s %6s %12s\n", "problem",
                "algo", "best", "median", "mean", "worst", "std_dev", "fr", "mv", "sr",
                "mfe");
}

void print_summary_row(const experiment_summary& s) {
    std::printf("%-24s %-4s %13.6g %13.6g %13.6g %13.6g %12.4g %6.1f %10.3g %6.1f %12.1f\n",
                s.problem.c_str(), to_string(s.algo).c_str(), s.best, s.median, s.mean,
                s.worst, s.std_dev, s.feasibility_rate, s.mean_violation, s.success_rate,
                s.mfe);
    std::fflush(stdout);
}

problem_spec resolve_problem(const std::string& name, const std::string& file_path) {
    if (!file_path.empty()) {
        std::vector<problem_spec> defined = load_problem_file(file_path);
        for (problem_spec& problem : defined)
            if (problem.name == name) return std::move(problem);
    }
    return lookup(name);
}

int cmd_run(const std::string& problem_name, const std::string& file_path,
            experiment_options& opt) {
    apply_config_file(opt);
    const std::vector<algorithm> algos = parse_algorithms(opt.algo_list);
    if (algos.size() != 1)
        throw std::invalid_argument("'run' takes a single algorithm; use 'suite' for both");

    const problem_spec problem = resolve_problem(problem_name, file_path);
    const run_config config = make_config(opt, algos[0], problem, true);

    experiment_result result =
        run_experiment(problem, config, opt.runs, opt.seed, opt.threads);

    const std::filesystem::path outdir = resolve_outdir(opt.outdir);
    std::filesystem::create_directories(outdir);
    const std::string stem = problem.name + "_" + to_string(config.algo);
    export_trace_csv(trace_rows(result.runs), (outdir / (stem + ".csv")).string());
    export_summaries_json({result.summary}, config, opt.seed,
                          (outdir / (stem + ".json")).string());

    print_summary_header();
    print_summary_row(result.summary);
    return 0;
}

int cmd_suite(const std::string& suite_name, experiment_options& opt) {
    apply_config_file(opt);
    if (opt.algo_list == "bmr") opt.algo_list = "bmr,bwr";  // suite default: both
    const std::vector<algorithm> algos = parse_algorithms(opt.algo_list);
    const std::vector<std::string>& names = suite(suite_name);

    nlohmann::json aggregate = nlohmann::json::array();
    print_summary_header();
    for (const algorithm algo : algos) {
        for (const std::string& name : names) {
            const problem_spec problem = lookup(name);
            const run_config config = make_config(opt, algo, problem, false);
            experiment_result result =
                run_experiment(problem, config, opt.runs, opt.seed, opt.threads);
            print_summary_row(result.summary);
            // Budgets differ per problem, so each entry carries its own config echo.
            nlohmann::json entry =
                nlohmann::json::parse(summaries_json({result.summary}, config, opt.seed));
            aggregate.push_back(std::move(entry.at(0)));
        }
    }

    const std::filesystem::path outdir = resolve_outdir(opt.outdir);
    std::filesystem::create_directories(outdir);
    const std::string path = (outdir / (suite_name + "_summaries.json")).string();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open '" + path + "' for writing");
    out << aggregate.dump(2) << '\n';
    std::printf("wrote %s\n", path.c_str());
    return 0;
}

std::vector<experiment_summary> load_side(const std::string& path,
                                          const std::string& algo_filter) {
    std::vector<experiment_summary> summaries = import_summaries_json(path);
    if (!algo_filter.empty()) {
        const algorithm wanted = algorithm_from_string(algo_filter);
        std::erase_if(summaries,
                      [&](const experiment_summary& s) { return s.algo != wanted; });
        if (summaries.empty())
            throw std::invalid_argument("no " + algo_filter + " entries in '" + path + "'");
    }
    return summaries;
}

int cmd_compare(const std::string& a_path, const std::string& b_path,
                const std::string& algo_a, const std::string& algo_b,
                const std::string& criteria_list, double tolerance) {
    std::vector<criterion> criteria;
    std::stringstream in(criteria_list);
    std::string token;
    while (std::getline(in, token, ','))
        if (!token.empty()) criteria.push_back(criterion_from_string(token));
    if (criteria.empty()) throw std::invalid_argument("no comparison criteria given");

    const std::vector<experiment_summary> a = load_side(a_path, algo_a);
    const std::vector<experiment_summary> b = load_side(b_path, algo_b);
    const comparison_matrix matrix = compare(a, b, criteria, tolerance);

    std::printf("%-10s %8s %8s %8s %10s\n", "criterion", "better", "similar", "inferior",
                "success%");
    for (const criterion_counts& row : matrix.rows)
        std::printf("%-10s %8d %8d %8d %9.1f%%\n", to_string(row.which).c_str(),
                    row.better, row.similar, row.inferior, row.success_percent);
    return 0;
}

int cmd_plot(const std::vector<std::string>& csv_paths, const std::string& out_path,
             const std::string& title) {
    std::vector<plot_series> series;
    for (const std::string& path : csv_paths) {
        const std::vector<trace_row> rows = import_trace_csv(path);
        if (rows.empty()) throw io_error("'" + path + "' holds no trace rows");

        // Average the best-so-far fitness across runs at each iteration.
        std::map<long long, std::pair<double, long long>> by_iteration;  // sum, count
        for (const trace_row& row : rows) {
            auto& [sum, count] = by_iteration[row.iteration];
            sum += row.best_penalized;
            count += 1;
        }
        plot_series s;
        s.label = std::filesystem::path(path).stem().string();
        for (const auto& [iteration, entry] : by_iteration)
            s.points.push_back({static_cast<double>(iteration),
                                entry.first / static_cast<double>(entry.second)});
        series.push_back(std::move(s));
    }

    const std::string svg = render_line_svg(title, "iteration", "best fitness", series);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw io_error("cannot open '" + out_path + "' for writing");
    out << svg;
    std::printf("wrote %s\n", out_path.c_str());
    return 0;
}

int cmd_list() {
    std::printf("problems:\n");
    for (const std::string& name : catalog_names()) {
        const problem_spec problem = lookup(name);
        std::printf("  %-24s %3zu vars%s\n", name.c_str(), problem.dimension,
                    problem.constrained() ? "  constrained" : "");
    }
    std::printf("suites:\n");
    for (const std::string& name : suite_names())
        std::printf("  %-24s %3zu problems\n", name.c_str(), suite(name).size());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"BMR/BWR population optimizer"};
    app.require_subcommand(1);

    experiment_options run_opt, suite_opt;
    std::string problem_name, file_path, suite_name;

    CLI::App* run_cmd = app.add_subcommand("run", "Run one algorithm on one problem");
    run_cmd->add_option("problem", problem_name, "Catalog or definition-file problem name")
        ->required();
    run_cmd->add_option("--file", file_path,
                        "Problem definition file; its names shadow the catalog");
    add_experiment_options(run_cmd, run_opt, false);

    CLI::App* suite_cmd = app.add_subcommand("suite", "Run a named problem suite");
    suite_cmd->add_option("suite", suite_name, "Suite name (see 'list')")->required();
    add_experiment_options(suite_cmd, suite_opt, true);

    std::string a_path, b_path, algo_a, algo_b;
    std::string criteria_list = "best,median,mean,worst,std_dev,fr,mv,sr,mfe";
    double tolerance = 1e-6;
    CLI::App* compare_cmd =
        app.add_subcommand("compare", "Compare two summary files per problem");
    compare_cmd->add_option("--a", a_path, "Candidate summary JSON")->required();
    compare_cmd->add_option("--b", b_path, "Baseline summary JSON")->required();
    compare_cmd->add_option("--algo-a", algo_a, "Keep only this algorithm from --a");
    compare_cmd->add_option("--algo-b", algo_b, "Keep only this algorithm from --b");
    compare_cmd->add_option("--criteria", criteria_list, "Comma-separated criteria")
        ->capture_default_str();
    compare_cmd->add_option("--tol", tolerance, "Relative similarity tolerance")
        ->capture_default_str();

    std::vector<std::string> csv_paths;
    std::string plot_out = "plot.svg", plot_title = "Convergence";
    CLI::App* plot_cmd =
        app.add_subcommand("plot", "Render convergence traces as an SVG chart");
    plot_cmd->add_option("csv", csv_paths, "Trace CSV files, one series each")
        ->required()
        ->expected(-1);
    plot_cmd->add_option("-o,--out", plot_out, "Output SVG path")->capture_default_str();
    plot_cmd->add_option("--title", plot_title, "Chart title")->capture_default_str();

    CLI::App* list_cmd = app.add_subcommand("list", "List problems and suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run_cmd->parsed()) return cmd_run(problem_name, file_path, run_opt);
        if (suite_cmd->parsed()) return cmd_suite(suite_name, suite_opt);
        if (compare_cmd->parsed())
            return cmd_compare(a_path, b_path, algo_a, algo_b, criteria_list, tolerance);
        if (plot_cmd->parsed()) return cmd_plot(csv_paths, plot_out, plot_title);
        if (list_cmd->parsed()) return cmd_list();
    } catch (const std::invalid_argument& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 2;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 1;
    }
    return 0;
}
