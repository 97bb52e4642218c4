#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "resmax/solvers.hpp"

namespace resmax {

/// Grid study over random log-det instances: for every combination of
/// ground set size, removal budget, and trial, draw an instance, solve it
/// with the two-phase greedy, certify the optimum exactly, and record the
/// achieved fraction of the optimum next to the curvature-based
/// guarantee.
struct ExperimentConfig {
    std::vector<int> m_values = {8, 9, 10, 11, 12, 13, 14, 15};
    int alpha = 7;
    std::vector<int> beta_values = {1, 2, 3, 4, 5, 6};
    int trials = 10;
    /// Dimension of the random positive semidefinite matrices.
    int d = 20;
    uint64_t base_seed = 42;
    /// kExact certifies every removal; kGreedy trades certification for
    /// speed. The optimum reference is always exact.
    RemovalMethod removal_method = RemovalMethod::kExact;
    /// When non-empty, rows are written here and aggregates to the
    /// matching "_summary.csv" path.
    std::string output_path;
    /// Worker threads; 0 picks the hardware concurrency.
    int threads = 0;
    /// Optional progress callback: (cells done, cells total).
    std::function<void(int, int)> progress;
};

struct ExperimentRow {
    int m = 0;
    int beta = 0;
    int trial = 0;
    uint64_t seed = 0;
    double kappa = 0.0;
    /// Exact optimum of the max-min objective.
    double f_star = 0.0;
    /// Residual value achieved by the two-phase greedy.
    double f_alg = 0.0;
    /// f_alg / f_star.
    double ratio = 0.0;
    /// Curvature-based guarantee for this beta.
    double bound = 0.0;
    /// Selection-phase oracle evaluations of the two-phase greedy.
    long long evals_alg = 0;
    /// Total oracle evaluations of the exact solver.
    long long evals_exact = 0;
};

struct ExperimentReport {
    ExperimentConfig config;
    /// Sorted by (m, beta, trial).
    std::vector<ExperimentRow> rows;
    /// Human-readable anomalies, e.g. trials whose curvature is <= 0.9.
    std::vector<std::string> warnings;
};

/// Stable per-trial seed, derived by chaining a SplitMix64 finalizer over
/// (base_seed, m, beta, trial). Running a sub-grid therefore reproduces
/// exactly the rows the full grid would produce for those cells.
uint64_t derive_trial_seed(uint64_t base_seed, int m, int beta, int trial);

/// Runs the full grid. Duplicate grid values are collapsed and the grid
/// is processed in sorted order. Capacity of every exact enumeration is
/// checked up front, before any oracle work. Throws on the first cell
/// failure.
ExperimentReport run_experiment(const ExperimentConfig& config);

struct CellSummary {
    int m = 0;
    int beta = 0;
    double mean_ratio = 0.0;
    double min_ratio = 0.0;
    double max_ratio = 0.0;
};

struct SummaryTable {
    /// Per (m, beta) aggregates, sorted by (m, beta).
    std::vector<CellSummary> cells;
    /// Mean ratio per beta pooled across all m and trials, sorted by beta.
    std::vector<std::pair<int, double>> beta_means;
    /// One-line description of how the mean ratio moves as beta grows.
    std::string trend_note;
};

SummaryTable summarize(const ExperimentReport& report);

/// CSV with header m,beta,trial,seed,kappa,f_star,f_alg,ratio,bound,
/// evals_alg,evals_exact. All doubles in shortest round-trip form.
std::string report_csv(const ExperimentReport& report);

/// CSV with header m,beta,mean_ratio,min_ratio,max_ratio.
std::string summary_csv(const SummaryTable& table);

/// "results.csv" -> "results_summary.csv"; other names get the suffix
/// appended before any missing extension.
std::string summary_path_for(const std::string& rows_path);

/// Writes report_csv to the given path and summary_csv alongside it.
void write_report_files(const ExperimentReport& report,
                        const std::string& rows_path);

}  // namespace resmax
