#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "resmax/oracle.hpp"
#include "resmax/subset.hpp"

namespace resmax {

/// Singleton values below this threshold make curvature undefined.
inline constexpr double kSingletonEpsilon = 1e-12;

/// Raw curvature may stray outside [0, 1] by at most this much before it
/// is treated as evidence of a non-submodular or non-monotone oracle.
inline constexpr double kCurvatureClampTolerance = 1e-6;

/// Below this threshold the curvature-dependent factors are replaced by
/// their analytic limits.
inline constexpr double kKappaLimitThreshold = 1e-12;

/// Default tolerance for the inequality checks in this header.
inline constexpr double kCheckTolerance = 1e-9;

struct CurvatureReport {
    /// Total curvature, clamped into [0, 1].
    double kappa = 0.0;
    /// Element attaining the minimal marginal-to-singleton ratio
    /// (smallest index on ties).
    int argmin_element = 0;
    /// Ratio (f(V) - f(V minus v)) / f({v}) for each element v.
    std::vector<double> per_element_ratios;
    /// Oracle evaluations consumed: exactly 2m + 1.
    long long eval_count_used = 0;
};

/// Measures total curvature with 2m + 1 oracle evaluations: one full-set
/// value, m singletons, m leave-one-out values.
///
/// Throws DegenerateElementError if some singleton value is <= 1e-12 and
/// InvalidInputError if the raw curvature lies outside [0, 1] by more
/// than kCurvatureClampTolerance.
CurvatureReport compute_curvature(const ObjectiveOracle& f);

enum class BoundBranch {
    kOneMinusKappa,
    kInvBetaPlusOne,
};

/// "one_minus_kappa" or "inv_beta_plus_one".
const char* bound_branch_name(BoundBranch branch);

struct BoundReport {
    double kappa = 0.0;
    int beta = 0;
    double bound = 0.0;
    BoundBranch branch = BoundBranch::kOneMinusKappa;
};

/// Worst-case approximation guarantee for the two-phase solver:
/// max(1 - kappa, 1 / (beta + 1)) * (1 - exp(-kappa)) / kappa,
/// with the second factor replaced by its limit 1 when kappa < 1e-12.
/// Ties between the branches resolve to one_minus_kappa.
BoundReport theorem1_bound(double kappa, int beta);

/// (1 - kappa) / kappa * (1 - exp(-kappa)) for kappa in (0, 1]; returns
/// the pinned limiting value 0.5 when kappa < 1e-12.
double g_curve(double kappa);

struct LemmaCheck {
    bool holds = false;
    /// How much room the inequality has; negative past tolerance means a
    /// violation.
    double slack = 0.0;
};

/// Checks f(A) >= (1 - kappa) * sum of singleton values over A.
LemmaCheck check_curvature_sum_bound(const ObjectiveOracle& f, const Subset& a,
                                     double kappa,
                                     double tol = kCheckTolerance);

struct PairLemmaCheck {
    /// True when every singleton value in Y dominates every one in P;
    /// the inequality below is only claimed in that case.
    bool precondition_met = false;
    bool holds = false;
    double slack = 0.0;
};

/// Checks f(P | Y) <= |P| * f(Y) for disjoint non-empty P and Y, valid
/// whenever Y's singleton values dominate P's.
PairLemmaCheck check_dominated_marginal_bound(const ObjectiveOracle& f,
                                              const Subset& p, const Subset& y,
                                              double tol = kCheckTolerance);

struct SweepResult {
    std::string property;
    int samples = 0;
    int violations = 0;
    /// Minimum slack observed across samples.
    double worst_slack = 0.0;
};

/// Randomized property sweeps over seeded subsets. A sample violates its
/// property when the slack is below -tol.
SweepResult sweep_monotonicity(const ObjectiveOracle& f, int samples,
                               uint64_t seed, double tol = kCheckTolerance);
SweepResult sweep_diminishing_returns(const ObjectiveOracle& f, int samples,
                                      uint64_t seed,
                                      double tol = kCheckTolerance);
SweepResult sweep_union_intersection(const ObjectiveOracle& f, int samples,
                                     uint64_t seed,
                                     double tol = kCheckTolerance);
SweepResult sweep_curvature_sum_bound(const ObjectiveOracle& f, double kappa,
                                      int samples, uint64_t seed,
                                      double tol = kCheckTolerance);
SweepResult sweep_dominated_marginal_bound(const ObjectiveOracle& f,
                                           int samples, uint64_t seed,
                                           double tol = kCheckTolerance);

}  // namespace resmax
