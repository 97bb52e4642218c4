#include "resmax/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "resmax/analysis.hpp"
#include "resmax/combinatorics.hpp"
#include "resmax/errors.hpp"
#include "resmax/functions.hpp"
#include "resmax/instance_io.hpp"
#include "resmax/rng.hpp"
#include "resmax/text.hpp"

namespace resmax {

uint64_t derive_trial_seed(uint64_t base_seed, int m, int beta, int trial) {
    uint64_t h = mix64(base_seed);
    h = mix64(h ^ static_cast<uint64_t>(m));
    h = mix64(h ^ static_cast<uint64_t>(beta));
    h = mix64(h ^ static_cast<uint64_t>(trial));
    return h;
}

namespace {

struct Cell {
    int m;
    int beta;
    int trial;
};

std::vector<int> sorted_unique(std::vector<int> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

void validate_config(const ExperimentConfig& config,
                     const std::vector<int>& m_values,
                     const std::vector<int>& beta_values) {
    if (m_values.empty()) {
        throw InvalidInputError("experiment needs at least one ground set size");
    }
    if (beta_values.empty()) {
        throw InvalidInputError("experiment needs at least one beta value");
    }
    if (config.trials < 1) {
        throw InvalidInputError("experiment needs at least one trial, got " +
                                std::to_string(config.trials));
    }
    if (config.d < 1) {
        throw InvalidInputError("matrix dimension must be >= 1, got " +
                                std::to_string(config.d));
    }
    for (int beta : beta_values) {
        if (beta < 0 || beta > config.alpha) {
            throw InvalidInputError(
                "beta = " + std::to_string(beta) +
                " violates 0 <= beta <= alpha with alpha = " +
                std::to_string(config.alpha));
        }
    }
    for (int m : m_values) {
        if (config.alpha > m) {
            throw InvalidInputError("alpha = " + std::to_string(config.alpha) +
                                    " exceeds the ground set size " +
                                    std::to_string(m));
        }
    }
    // Every exact enumeration must fit its cap before any work starts.
    for (int m : m_values) {
        const uint64_t outer = binomial(m, config.alpha);
        for (int beta : beta_values) {
            const uint64_t inner = binomial(config.alpha, beta);
            if (inner == 0 || outer > kDefaultExactCap / inner) {
                throw CapacityError(
                    "cell m=" + std::to_string(m) + " beta=" +
                    std::to_string(beta) + " needs about " +
                    std::to_string(outer) + " * " + std::to_string(inner) +
                    " evaluations for the exact solve, above the cap");
            }
            if (config.removal_method != RemovalMethod::kGreedy &&
                inner > kDefaultRemovalCap) {
                throw CapacityError("cell m=" + std::to_string(m) + " beta=" +
                                    std::to_string(beta) + " needs " +
                                    std::to_string(inner) +
                                    " removal subsets, above the cap");
            }
        }
    }
}

struct CellOutcome {
    ExperimentRow row;
    std::vector<std::string> warnings;
};

CellOutcome run_cell(const ExperimentConfig& config, const Cell& cell) {
    CellOutcome outcome;
    ExperimentRow& row = outcome.row;
    row.m = cell.m;
    row.beta = cell.beta;
    row.trial = cell.trial;
    row.seed = derive_trial_seed(config.base_seed, cell.m, cell.beta, cell.trial);

    LogDetFunction f = random_psd_instance(cell.m, config.d, row.seed);
    ProblemInstance instance(f, config.alpha, cell.beta);
    CurvatureReport curvature = compute_curvature(f);
    row.kappa = curvature.kappa;

    SolverOptions options;
    options.removal = config.removal_method;
    SolveResult alg = resilient_greedy(instance, options);
    SolveResult exact = exact_maxmin(instance);

    row.f_alg = alg.residual_value;
    row.f_star = exact.residual_value;
    if (row.f_star != 0.0) {
        row.ratio = row.f_alg / row.f_star;
    } else {
        row.ratio = row.f_alg == 0.0 ? 1.0 : row.f_alg / row.f_star;
    }
    row.bound = theorem1_bound(curvature.kappa, cell.beta).bound;
    row.evals_alg = alg.eval_count;
    row.evals_exact = exact.eval_count;

    const std::string where = "m=" + std::to_string(cell.m) +
                              " beta=" + std::to_string(cell.beta) +
                              " trial=" + std::to_string(cell.trial);
    if (row.kappa <= 0.9) {
        outcome.warnings.push_back(where + ": curvature " +
                                   format_double(row.kappa) +
                                   " is at or below 0.9");
    }
    if (row.ratio < row.bound - 1e-9) {
        outcome.warnings.push_back(where + ": ratio " + format_double(row.ratio) +
                                   " falls below the guarantee " +
                                   format_double(row.bound));
    }
    return outcome;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config) {
    const std::vector<int> m_values = sorted_unique(config.m_values);
    const std::vector<int> beta_values = sorted_unique(config.beta_values);
    validate_config(config, m_values, beta_values);

    std::vector<Cell> cells;
    cells.reserve(m_values.size() * beta_values.size() *
                  static_cast<std::size_t>(config.trials));
    for (int m : m_values) {
        for (int beta : beta_values) {
            for (int trial = 0; trial < config.trials; ++trial) {
                cells.push_back(Cell{m, beta, trial});
            }
        }
    }

    std::vector<CellOutcome> outcomes(cells.size());
    std::atomic<std::size_t> next{0};
    std::atomic<int> done{0};
    std::mutex progress_mu;
    std::exception_ptr failure;
    std::mutex failure_mu;

    int threads = config.threads;
    if (threads <= 0) {
        threads = static_cast<int>(std::thread::hardware_concurrency());
        if (threads < 1) threads = 1;
    }
    threads = std::min<int>(threads, static_cast<int>(cells.size()));

    auto worker = [&]() {
        while (true) {
            std::size_t index = next.fetch_add(1);
            if (index >= cells.size()) return;
            {
                std::lock_guard<std::mutex> lock(failure_mu);
                if (failure) return;
            }
            try {
                outcomes[index] = run_cell(config, cells[index]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mu);
                if (!failure) failure = std::current_exception();
                return;
            }
            int finished = done.fetch_add(1) + 1;
            if (config.progress) {
                std::lock_guard<std::mutex> lock(progress_mu);
                config.progress(finished, static_cast<int>(cells.size()));
            }
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    ExperimentReport report;
    report.config = config;
    report.rows.reserve(cells.size());
    for (CellOutcome& outcome : outcomes) {
        report.rows.push_back(outcome.row);
        for (std::string& w : outcome.warnings) {
            report.warnings.push_back(std::move(w));
        }
    }

    if (!config.output_path.empty()) {
        write_report_files(report, config.output_path);
    }
    return report;
}

SummaryTable summarize(const ExperimentReport& report) {
    SummaryTable table;
    // Rows arrive sorted by (m, beta, trial), so grouping is a single scan.
    for (const ExperimentRow& row : report.rows) {
        if (table.cells.empty() || table.cells.back().m != row.m ||
            table.cells.back().beta != row.beta) {
            CellSummary cell;
            cell.m = row.m;
            cell.beta = row.beta;
            cell.mean_ratio = 0.0;
            cell.min_ratio = row.ratio;
            cell.max_ratio = row.ratio;
            table.cells.push_back(cell);
        }
        CellSummary& cell = table.cells.back();
        cell.mean_ratio += row.ratio;
        cell.min_ratio = std::min(cell.min_ratio, row.ratio);
        cell.max_ratio = std::max(cell.max_ratio, row.ratio);
    }
    std::vector<int> counts;
    counts.reserve(table.cells.size());
    for (CellSummary& cell : table.cells) {
        int count = 0;
        for (const ExperimentRow& row : report.rows) {
            if (row.m == cell.m && row.beta == cell.beta) ++count;
        }
        counts.push_back(count);
        cell.mean_ratio /= static_cast<double>(count);
    }

    // Pool across m per beta.
    std::vector<int> betas;
    for (const ExperimentRow& row : report.rows) {
        if (std::find(betas.begin(), betas.end(), row.beta) == betas.end()) {
            betas.push_back(row.beta);
        }
    }
    std::sort(betas.begin(), betas.end());
    for (int beta : betas) {
        double sum = 0.0;
        int count = 0;
        for (const ExperimentRow& row : report.rows) {
            if (row.beta == beta) {
                sum += row.ratio;
                ++count;
            }
        }
        table.beta_means.emplace_back(beta, sum / static_cast<double>(count));
    }

    if (table.beta_means.size() < 2) {
        table.trend_note = "only one beta value; no trend to report";
    } else {
        bool non_increasing = true;
        for (std::size_t i = 1; i < table.beta_means.size(); ++i) {
            if (table.beta_means[i].second >
                table.beta_means[i - 1].second + 1e-12) {
                non_increasing = false;
                break;
            }
        }
        const auto& first = table.beta_means.front();
        const auto& last = table.beta_means.back();
        std::string span = "mean ratio moves from " +
                           format_double(first.second) + " at beta=" +
                           std::to_string(first.first) + " to " +
                           format_double(last.second) + " at beta=" +
                           std::to_string(last.first);
        if (non_increasing) {
            table.trend_note = span + " (monotonically non-increasing)";
        } else if (last.second <= first.second) {
            table.trend_note = span + " (decreasing overall, not monotone)";
        } else {
            table.trend_note = span + " (no decline observed)";
        }
    }
    return table;
}

std::string report_csv(const ExperimentReport& report) {
    std::string out =
        "m,beta,trial,seed,kappa,f_star,f_alg,ratio,bound,evals_alg,"
        "evals_exact\n";
    for (const ExperimentRow& row : report.rows) {
        out += std::to_string(row.m);
        out += ',';
        out += std::to_string(row.beta);
        out += ',';
        out += std::to_string(row.trial);
        out += ',';
        out += std::to_string(row.seed);
        out += ',';
        out += format_double(row.kappa);
        out += ',';
        out += format_double(row.f_star);
        out += ',';
        out += format_double(row.f_alg);
        out += ',';
        out += format_double(row.ratio);
        out += ',';
        out += format_double(row.bound);
        out += ',';
        out += std::to_string(row.evals_alg);
        out += ',';
        out += std::to_string(row.evals_exact);
        out += '\n';
    }
    return out;
}

std::string summary_csv(const SummaryTable& table) {
    std::string out = "m,beta,mean_ratio,min_ratio,max_ratio\n";
    for (const CellSummary& cell : table.cells) {
        out += std::to_string(cell.m);
        out += ',';
        out += std::to_string(cell.beta);
        out += ',';
        out += format_double(cell.mean_ratio);
        out += ',';
        out += format_double(cell.min_ratio);
        out += ',';
        out += format_double(cell.max_ratio);
        out += '\n';
    }
    return out;
}

std::string summary_path_for(const std::string& rows_path) {
    const std::string ext = ".csv";
    if (rows_path.size() > ext.size() &&
        rows_path.compare(rows_path.size() - ext.size(), ext.size(), ext) == 0) {
        return rows_path.substr(0, rows_path.size() - ext.size()) +
               "_summary.csv";
    }
    return rows_path + "_summary.csv";
}

void write_report_files(const ExperimentReport& report,
                        const std::string& rows_path) {
    write_text_file(rows_path, report_csv(report));
    write_text_file(summary_path_for(rows_path), summary_csv(summarize(report)));
}

}  // namespace resmax
