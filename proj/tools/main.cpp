// Command-line front end for the resilient submodular maximization library.
//
// Conventions: stdout carries only machine-readable results (CSV rows or
// JSON), everything else goes to stderr. Exit code 0 on success, 1 on
// domain errors, 2 on usage or parse errors.

#include <cstdint>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "resmax/adversary.hpp"
#include "resmax/analysis.hpp"
#include "resmax/errors.hpp"
#include "resmax/experiments.hpp"
#include "resmax/functions.hpp"
#include "resmax/instance_io.hpp"
#include "resmax/oracle.hpp"
#include "resmax/solvers.hpp"
#include "resmax/subset.hpp"
#include "resmax/text.hpp"

namespace {

using namespace resmax;

RemovalMethod removal_method_from_name(const std::string& name) {
    if (name == "exact") return RemovalMethod::kExact;
    if (name == "greedy") return RemovalMethod::kGreedy;
    if (name == "auto") return RemovalMethod::kAuto;
    throw InvalidInputError("unknown removal method \"" + name +
                            "\"; expected exact, greedy, or auto");
}

struct SolveArgs {
    std::string instance_path;
    int alpha = 0;
    int beta = 0;
    std::string solver = "resilient";
    uint64_t seed = 0;
    uint64_t cap = 0;  // 0 keeps the defaults
};

void run_solve(const SolveArgs& args) {
    std::shared_ptr<ObjectiveOracle> f = load_instance(args.instance_path);
    ProblemInstance instance(*f, args.alpha, args.beta);

    SolverOptions options;
    if (args.cap > 0) options.removal_cap = args.cap;
    uint64_t exact_cap = args.cap > 0 ? args.cap : kDefaultExactCap;

    SolveResult result;
    if (args.solver == "resilient") {
        result = resilient_greedy(instance, options);
    } else if (args.solver == "exact") {
        result = exact_maxmin(instance, exact_cap);
    } else if (args.solver == "greedy") {
        result = baseline_greedy(instance, options);
    } else if (args.solver == "top") {
        result = baseline_top_alpha(instance, options);
    } else if (args.solver == "random") {
        result = baseline_random(instance, args.seed, options);
    } else {
        throw InvalidInputError("unknown solver \"" + args.solver +
                                "\"; expected resilient, exact, greedy, top, "
                                "or random");
    }

    CurvatureReport curvature = compute_curvature(*f);
    BoundReport bound = theorem1_bound(curvature.kappa, args.beta);

    std::cout << "solver,selected,residual,evals,kappa,bound\n";
    std::cout << result.solver_name << ',' << result.selected.to_string() << ','
              << format_double(result.residual_value) << ',' << result.eval_count
              << ',' << format_double(curvature.kappa) << ','
              << format_double(bound.bound) << '\n';
}

struct AttackArgs {
    std::string instance_path;
    std::string subset_text;
    int beta = 0;
    std::string method = "exact";
    uint64_t cap = 0;
};

void run_attack(const AttackArgs& args) {
    std::shared_ptr<ObjectiveOracle> f = load_instance(args.instance_path);
    Subset a = Subset::parse(args.subset_text, f->ground_size());

    RemovalResult result;
    if (args.method == "exact") {
        result = exact_removal(*f, a, args.beta,
                               args.cap > 0 ? args.cap : kDefaultRemovalCap);
    } else if (args.method == "greedy") {
        result = greedy_removal(*f, a, args.beta);
    } else {
        throw InvalidInputError("unknown removal method \"" + args.method +
                                "\"; expected exact or greedy");
    }

    std::cout << "removed,residual,exact,evals\n";
    std::cout << result.removed.to_string() << ','
              << format_double(result.residual_value) << ','
              << (result.exact ? "true" : "false") << ','
              << result.eval_count_used << '\n';
}

void run_curvature(const std::string& instance_path) {
    std::shared_ptr<ObjectiveOracle> f = load_instance(instance_path);
    CurvatureReport report = compute_curvature(*f);
    std::cout << "kappa,argmin_element,evals\n";
    std::cout << format_double(report.kappa) << ',' << report.argmin_element
              << ',' << report.eval_count_used << '\n';
}

void run_bound(double kappa, int beta) {
    BoundReport report = theorem1_bound(kappa, beta);
    std::cout << "kappa,beta,bound,branch\n";
    std::cout << format_double(report.kappa) << ',' << report.beta << ','
              << format_double(report.bound) << ','
              << bound_branch_name(report.branch) << '\n';
}

void run_gcurve(double kappa) {
    std::cout << format_double(g_curve(kappa)) << '\n';
}

struct ExperimentArgs {
    std::string config_path;
    std::vector<int> m_values;
    std::vector<int> beta_values;
    int alpha = -1;
    int trials = -1;
    int d = -1;
    bool base_seed_set = false;
    uint64_t base_seed = 0;
    std::string removal;
    std::string output;
    int threads = -1;
};

ExperimentConfig experiment_config_from_file(const std::string& path) {
    nlohmann::json j = nlohmann::json::parse(read_text_file(path), nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        throw ParseError("experiment config must be a JSON object: " + path);
    }
    ExperimentConfig config;
    for (const auto& [key, value] : j.items()) {
        if (key == "m_values") {
            config.m_values = value.get<std::vector<int>>();
        } else if (key == "alpha") {
            config.alpha = value.get<int>();
        } else if (key == "beta_values") {
            config.beta_values = value.get<std::vector<int>>();
        } else if (key == "trials") {
            config.trials = value.get<int>();
        } else if (key == "d") {
            config.d = value.get<int>();
        } else if (key == "base_seed") {
            config.base_seed = value.get<uint64_t>();
        } else if (key == "removal_method") {
            config.removal_method =
                removal_method_from_name(value.get<std::string>());
        } else if (key == "output_path") {
            config.output_path = value.get<std::string>();
        } else if (key == "threads") {
            config.threads = value.get<int>();
        } else {
            throw ParseError("unknown experiment config key \"" + key + "\"");
        }
    }
    return config;
}

void run_experiment_command(const ExperimentArgs& args) {
    ExperimentConfig config;
    if (!args.config_path.empty()) {
        config = experiment_config_from_file(args.config_path);
    }
    if (!args.m_values.empty()) config.m_values = args.m_values;
    if (!args.beta_values.empty()) config.beta_values = args.beta_values;
    if (args.alpha >= 0) config.alpha = args.alpha;
    if (args.trials >= 0) config.trials = args.trials;
    if (args.d >= 0) config.d = args.d;
    if (args.base_seed_set) config.base_seed = args.base_seed;
    if (!args.removal.empty()) {
        config.removal_method = removal_method_from_name(args.removal);
    }
    if (!args.output.empty()) config.output_path = args.output;
    if (config.output_path.empty()) config.output_path = "experiment.csv";
    if (args.threads >= 0) config.threads = args.threads;

    config.progress = [](int done, int total) {
        if (done % 25 == 0 || done == total) {
            std::cerr << "progress: " << done << "/" << total << " cells\n";
        }
    };

    ExperimentReport report = run_experiment(config);
    SummaryTable table = summarize(report);

    for (const std::string& warning : report.warnings) {
        std::cerr << "warning: " << warning << '\n';
    }
    std::cerr << table.trend_note << '\n';
    std::cerr << "rows written to " << config.output_path << ", summary to "
              << summary_path_for(config.output_path) << '\n';

    std::cout << summary_csv(table);
}

void run_gen_logdet(int m, int d, uint64_t seed, const std::string& output) {
    LogDetFunction f = random_psd_instance(m, d, seed);
    std::string text = serialize_logdet_instance(f);
    if (output.empty()) {
        std::cout << text << '\n';
    } else {
        write_text_file(output, text);
        std::cerr << "instance written to " << output << '\n';
    }
}

int run_check(const std::string& instance_path, int samples, uint64_t seed) {
    std::shared_ptr<ObjectiveOracle> f = load_instance(instance_path);
    CurvatureReport curvature = compute_curvature(*f);

    std::vector<SweepResult> sweeps;
    sweeps.push_back(sweep_monotonicity(*f, samples, seed));
    sweeps.push_back(sweep_diminishing_returns(*f, samples, seed + 1));
    sweeps.push_back(sweep_union_intersection(*f, samples, seed + 2));
    sweeps.push_back(
        sweep_curvature_sum_bound(*f, curvature.kappa, samples, seed + 3));
    sweeps.push_back(sweep_dominated_marginal_bound(*f, samples, seed + 4));

    std::cout << "property,samples,violations,worst_slack,status\n";
    bool all_pass = true;
    for (const SweepResult& sweep : sweeps) {
        bool pass = sweep.violations == 0;
        all_pass = all_pass && pass;
        std::cout << sweep.property << ',' << sweep.samples << ','
                  << sweep.violations << ','
                  << (sweep.samples > 0 ? format_double(sweep.worst_slack)
                                        : std::string("none"))
                  << ',' << (pass ? "pass" : "fail") << '\n';
    }
    if (!all_pass) {
        std::cerr << "error: property violations detected\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Resilient monotone submodular maximization toolkit"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand(
        "solve", "Select a resilient set and certify its worst-case removal");
    solve->add_option("--instance", solve_args.instance_path,
                      "Instance JSON file")->required();
    solve->add_option("--alpha", solve_args.alpha, "Selection budget")
        ->required();
    solve->add_option("--beta", solve_args.beta, "Removal budget")->required();
    solve->add_option("--solver", solve_args.solver,
                      "resilient|exact|greedy|top|random");
    solve->add_option("--seed", solve_args.seed,
                      "Seed for the random baseline");
    solve->add_option("--cap", solve_args.cap,
                      "Override the enumeration caps");

    SolveArgs exact_args;
    exact_args.solver = "exact";
    CLI::App* exact = app.add_subcommand(
        "exact", "Exhaustively solve the max-min selection problem");
    exact->add_option("--instance", exact_args.instance_path,
                      "Instance JSON file")->required();
    exact->add_option("--alpha", exact_args.alpha, "Selection budget")
        ->required();
    exact->add_option("--beta", exact_args.beta, "Removal budget")->required();
    exact->add_option("--cap", exact_args.cap, "Override the enumeration caps");

    AttackArgs attack_args;
    CLI::App* attack = app.add_subcommand(
        "attack", "Find a worst-case removal from a given set");
    attack->add_option("--instance", attack_args.instance_path,
                       "Instance JSON file")->required();
    attack->add_option("--subset", attack_args.subset_text,
                       "Set under attack, e.g. \"{0,2,5}\"")->required();
    attack->add_option("--beta", attack_args.beta, "Removal budget")
        ->required();
    attack->add_option("--method", attack_args.method, "exact|greedy");
    attack->add_option("--cap", attack_args.cap,
                       "Override the enumeration cap");

    std::string curvature_instance;
    CLI::App* curvature = app.add_subcommand(
        "curvature", "Measure the total curvature of an instance");
    curvature->add_option("--instance", curvature_instance,
                          "Instance JSON file")->required();

    double bound_kappa = 0.0;
    int bound_beta = 0;
    CLI::App* bound = app.add_subcommand(
        "bound", "Evaluate the worst-case approximation guarantee");
    bound->add_option("--kappa", bound_kappa, "Total curvature in [0, 1]")
        ->required();
    bound->add_option("--beta", bound_beta, "Removal budget")->required();

    double gcurve_kappa = 0.0;
    CLI::App* gcurve = app.add_subcommand(
        "gcurve", "Evaluate the curvature factor (1-k)/k*(1-exp(-k))");
    gcurve->add_option("--kappa", gcurve_kappa, "Total curvature in [0, 1]")
        ->required();

    ExperimentArgs experiment_args;
    CLI::App* experiment = app.add_subcommand(
        "experiment", "Run the random log-det grid study");
    experiment->add_option("--config", experiment_args.config_path,
                           "Experiment config JSON file");
    experiment->add_option("--m-values", experiment_args.m_values,
                           "Ground set sizes")->delimiter(',');
    experiment->add_option("--alpha", experiment_args.alpha,
                           "Selection budget");
    experiment->add_option("--beta-values", experiment_args.beta_values,
                           "Removal budgets")->delimiter(',');
    experiment->add_option("--trials", experiment_args.trials,
                           "Trials per cell");
    experiment->add_option("--d", experiment_args.d, "Matrix dimension");
    CLI::Option* base_seed_opt = experiment->add_option(
        "--base-seed", experiment_args.base_seed, "Base seed for the grid");
    experiment->add_option("--removal", experiment_args.removal,
                           "exact|greedy");
    experiment->add_option("--output", experiment_args.output,
                           "Rows CSV path (default experiment.csv)");
    experiment->add_option("--threads", experiment_args.threads,
                           "Worker threads (0 = all cores)");

    int gen_m = 0;
    int gen_d = 0;
    uint64_t gen_seed = 0;
    std::string gen_output;
    CLI::App* gen = app.add_subcommand(
        "gen-logdet", "Generate a random log-det instance file");
    gen->add_option("--m", gen_m, "Number of matrices")->required();
    gen->add_option("--d", gen_d, "Matrix dimension")->required();
    gen->add_option("--seed", gen_seed, "Generator seed")->required();
    gen->add_option("--output", gen_output, "Write here instead of stdout");

    std::string check_instance;
    int check_samples = 200;
    uint64_t check_seed = 1;
    CLI::App* check = app.add_subcommand(
        "check", "Sample-check the structural properties of an instance");
    check->add_option("--instance", check_instance, "Instance JSON file")
        ->required();
    check->add_option("--samples", check_samples, "Samples per property");
    check->add_option("--seed", check_seed, "Sweep seed");

    try {
        app.parse(argc, argv);

        if (*solve) {
            run_solve(solve_args);
        } else if (*exact) {
            run_solve(exact_args);
        } else if (*attack) {
            run_attack(attack_args);
        } else if (*curvature) {
            run_curvature(curvature_instance);
        } else if (*bound) {
            run_bound(bound_kappa, bound_beta);
        } else if (*gcurve) {
            run_gcurve(gcurve_kappa);
        } else if (*experiment) {
            experiment_args.base_seed_set = base_seed_opt->count() > 0;
            run_experiment_command(experiment_args);
        } else if (*gen) {
            run_gen_logdet(gen_m, gen_d, gen_seed, gen_output);
        } else if (*check) {
            return run_check(check_instance, check_samples, check_seed);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const resmax::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const resmax::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
