#include "resmax/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "resmax/errors.hpp"
#include "resmax/rng.hpp"
#include "resmax/text.hpp"

namespace resmax {

namespace {

double validated_kappa(double kappa) {
    if (std::isnan(kappa) || kappa < -kCheckTolerance ||
        kappa > 1.0 + kCheckTolerance) {
        throw InvalidInputError("curvature must lie in [0, 1], got " +
                                format_double(kappa));
    }
    return std::clamp(kappa, 0.0, 1.0);
}

}  // namespace

CurvatureReport compute_curvature(const ObjectiveOracle& f) {
    const int m = f.ground_size();
    const long long start = f.eval_count();
    const Subset full = Subset::full(m);
    const double full_value = f.evaluate(full);

    std::vector<double> singletons(static_cast<std::size_t>(m));
    for (int v = 0; v < m; ++v) {
        double s = f.evaluate(Subset({v}, m));
        if (!(s > kSingletonEpsilon)) {
            throw DegenerateElementError(
                v, "curvature is undefined: singleton value of element " +
                       std::to_string(v) + " is " + format_double(s) +
                       ", not above " + format_double(kSingletonEpsilon));
        }
        singletons[static_cast<std::size_t>(v)] = s;
    }

    CurvatureReport report;
    report.per_element_ratios.resize(static_cast<std::size_t>(m));
    double min_ratio = std::numeric_limits<double>::infinity();
    int argmin = 0;
    for (int v = 0; v < m; ++v) {
        double drop = full_value - f.evaluate(full.without(v));
        double ratio = drop / singletons[static_cast<std::size_t>(v)];
        report.per_element_ratios[static_cast<std::size_t>(v)] = ratio;
        if (ratio < min_ratio) {
            min_ratio = ratio;
            argmin = v;
        }
    }

    double raw = 1.0 - min_ratio;
    if (raw < -kCurvatureClampTolerance || raw > 1.0 + kCurvatureClampTolerance) {
        throw InvalidInputError(
            "curvature " + format_double(raw) +
            " lies outside [0, 1] beyond tolerance; the oracle does not look "
            "monotone submodular");
    }
    report.kappa = std::clamp(raw, 0.0, 1.0);
    report.argmin_element = argmin;
    report.eval_count_used = f.eval_count() - start;
    return report;
}

const char* bound_branch_name(BoundBranch branch) {
    switch (branch) {
        case BoundBranch::kOneMinusKappa:
            return "one_minus_kappa";
        case BoundBranch::kInvBetaPlusOne:
            return "inv_beta_plus_one";
    }
    return "unknown";
}

BoundReport theorem1_bound(double kappa, int beta) {
    if (beta < 0) {
        throw InvalidInputError("beta must be non-negative, got " +
                                std::to_string(beta));
    }
    BoundReport report;
    report.kappa = validated_kappa(kappa);
    report.beta = beta;
    const double one_minus = 1.0 - report.kappa;
    const double inv_beta = 1.0 / (static_cast<double>(beta) + 1.0);
    report.branch = one_minus >= inv_beta ? BoundBranch::kOneMinusKappa
                                          : BoundBranch::kInvBetaPlusOne;
    const double first = std::max(one_minus, inv_beta);
    const double second = report.kappa < kKappaLimitThreshold
                              ? 1.0
                              : (1.0 - std::exp(-report.kappa)) / report.kappa;
    report.bound = first * second;
    return report;
}

double g_curve(double kappa) {
    double k = validated_kappa(kappa);
    if (k < kKappaLimitThreshold) return 0.5;
    return (1.0 - k) / k * (1.0 - std::exp(-k));
}

LemmaCheck check_curvature_sum_bound(const ObjectiveOracle& f, const Subset& a,
                                     double kappa, double tol) {
    double k = validated_kappa(kappa);
    double singleton_sum = 0.0;
    for (int v : a) singleton_sum += f.evaluate(Subset({v}, a.parent_size()));
    double lhs = f.evaluate(a);
    LemmaCheck check;
    check.slack = lhs - (1.0 - k) * singleton_sum;
    check.holds = check.slack >= -tol;
    return check;
}

PairLemmaCheck check_dominated_marginal_bound(const ObjectiveOracle& f,
                                              const Subset& p, const Subset& y,
                                              double tol) {
    if (p.is_empty() || y.is_empty()) {
        throw InvalidInputError("both subsets must be non-empty");
    }
    if (!p.intersect(y).is_empty()) {
        throw InvalidInputError("the subsets must be disjoint");
    }
    const int m = p.parent_size();
    double max_p = -std::numeric_limits<double>::infinity();
    for (int v : p) max_p = std::max(max_p, f.evaluate(Subset({v}, m)));
    double min_y = std::numeric_limits<double>::infinity();
    for (int v : y) min_y = std::min(min_y, f.evaluate(Subset({v}, m)));

    PairLemmaCheck check;
    check.precondition_met = min_y >= max_p;
    if (!check.precondition_met) return check;

    double fy = f.evaluate(y);
    double marginal = f.evaluate(p.union_with(y)) - fy;
    check.slack = static_cast<double>(p.size()) * fy - marginal;
    check.holds = check.slack >= -tol;
    return check;
}

namespace {

Subset random_subset(Rng& rng, int m) {
    std::vector<int> members;
    for (int v = 0; v < m; ++v) {
        if (rng.next_u64() & 1) members.push_back(v);
    }
    return Subset(std::move(members), m);
}

Subset random_subset_of(Rng& rng, const Subset& super) {
    std::vector<int> members;
    for (int v : super) {
        if (rng.next_u64() & 1) members.push_back(v);
    }
    return Subset(std::move(members), super.parent_size());
}

/// Non-empty random subset of the given pool of candidate elements.
Subset random_nonempty_from(Rng& rng, const std::vector<int>& pool, int m) {
    std::vector<int> members;
    int forced = pool[static_cast<std::size_t>(
        rng.next_index(static_cast<int>(pool.size())))];
    for (int v : pool) {
        if (v == forced || (rng.next_u64() & 1)) members.push_back(v);
    }
    return Subset(std::move(members), m);
}

}  // namespace

SweepResult sweep_monotonicity(const ObjectiveOracle& f, int samples,
                               uint64_t seed, double tol) {
    Rng rng(seed);
    const int m = f.ground_size();
    SweepResult result;
    result.property = "monotonicity";
    result.worst_slack = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        Subset super = random_subset(rng, m);
        Subset sub = random_subset_of(rng, super);
        double slack = f.evaluate(super) - f.evaluate(sub);
        ++result.samples;
        result.worst_slack = std::min(result.worst_slack, slack);
        if (slack < -tol) ++result.violations;
    }
    return result;
}

SweepResult sweep_diminishing_returns(const ObjectiveOracle& f, int samples,
                                      uint64_t seed, double tol) {
    Rng rng(seed);
    const int m = f.ground_size();
    SweepResult result;
    result.property = "diminishing_returns";
    result.worst_slack = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        Subset super = random_subset(rng, m);
        if (super.size() == m) super = super.without(rng.next_index(m));
        Subset rest = super.complement();
        int x = rest.members()[static_cast<std::size_t>(
            rng.next_index(rest.size()))];
        Subset sub = random_subset_of(rng, super);
        double gain_small = f.evaluate(sub.with(x)) - f.evaluate(sub);
        double gain_large = f.evaluate(super.with(x)) - f.evaluate(super);
        double slack = gain_small - gain_large;
        ++result.samples;
        result.worst_slack = std::min(result.worst_slack, slack);
        if (slack < -tol) ++result.violations;
    }
    return result;
}

SweepResult sweep_union_intersection(const ObjectiveOracle& f, int samples,
                                     uint64_t seed, double tol) {
    Rng rng(seed);
    const int m = f.ground_size();
    SweepResult result;
    result.property = "union_intersection";
    result.worst_slack = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        Subset a = random_subset(rng, m);
        Subset b = random_subset(rng, m);
        double slack = f.evaluate(a) + f.evaluate(b) -
                       f.evaluate(a.union_with(b)) -
                       f.evaluate(a.intersect(b));
        ++result.samples;
        result.worst_slack = std::min(result.worst_slack, slack);
        if (slack < -tol) ++result.violations;
    }
    return result;
}

SweepResult sweep_curvature_sum_bound(const ObjectiveOracle& f, double kappa,
                                      int samples, uint64_t seed, double tol) {
    Rng rng(seed);
    const int m = f.ground_size();
    SweepResult result;
    result.property = "curvature_sum_bound";
    result.worst_slack = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        Subset a = random_subset(rng, m);
        LemmaCheck check = check_curvature_sum_bound(f, a, kappa, tol);
        ++result.samples;
        result.worst_slack = std::min(result.worst_slack, check.slack);
        if (!check.holds) ++result.violations;
    }
    return result;
}

SweepResult sweep_dominated_marginal_bound(const ObjectiveOracle& f,
                                           int samples, uint64_t seed,
                                           double tol) {
    Rng rng(seed);
    const int m = f.ground_size();
    SweepResult result;
    result.property = "dominated_marginal_bound";
    result.worst_slack = std::numeric_limits<double>::infinity();
    if (m < 2) return result;

    // Order elements by descending singleton value so that any prefix
    // dominates the corresponding suffix.
    std::vector<double> singles(static_cast<std::size_t>(m));
    for (int v = 0; v < m; ++v) singles[static_cast<std::size_t>(v)] =
        f.evaluate(Subset({v}, m));
    std::vector<int> order(static_cast<std::size_t>(m));
    for (int v = 0; v < m; ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return singles[static_cast<std::size_t>(a)] >
               singles[static_cast<std::size_t>(b)];
    });

    for (int i = 0; i < samples; ++i) {
        int cut = 1 + rng.next_index(m - 1);
        std::vector<int> top(order.begin(), order.begin() + cut);
        std::vector<int> bottom(order.begin() + cut, order.end());
        Subset y = random_nonempty_from(rng, top, m);
        Subset p = random_nonempty_from(rng, bottom, m);
        PairLemmaCheck check = check_dominated_marginal_bound(f, p, y, tol);
        if (!check.precondition_met) continue;
        ++result.samples;
        result.worst_slack = std::min(result.worst_slack, check.slack);
        if (!check.holds) ++result.violations;
    }
    return result;
}

}  // namespace resmax
