#include "resmax/solvers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

#include "resmax/combinatorics.hpp"
#include "resmax/errors.hpp"
#include "resmax/rng.hpp"

namespace resmax {

ProblemInstance::ProblemInstance(const ObjectiveOracle& oracle, int alpha,
                                 int beta)
    : oracle_(&oracle), alpha_(alpha), beta_(beta) {
    const int m = oracle.ground_size();
    if (beta < 0) {
        throw InvalidInputError("beta must be non-negative, got " +
                                std::to_string(beta));
    }
    if (beta > alpha) {
        throw InvalidInputError("beta must be at most alpha: beta = " +
                                std::to_string(beta) + " exceeds alpha = " +
                                std::to_string(alpha));
    }
    if (alpha > m) {
        throw InvalidInputError("alpha = " + std::to_string(alpha) +
                                " exceeds the ground set size " +
                                std::to_string(m));
    }
}

namespace {

/// Ranks every element by singleton value, best first; equal values keep
/// index order.
std::vector<int> rank_by_singleton(const ObjectiveOracle& f) {
    const int m = f.ground_size();
    std::vector<double> value(static_cast<std::size_t>(m));
    for (int v = 0; v < m; ++v) {
        value[static_cast<std::size_t>(v)] = f.evaluate(Subset({v}, m));
    }
    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return value[static_cast<std::size_t>(a)] >
               value[static_cast<std::size_t>(b)];
    });
    return order;
}

RemovalResult certify_removal(const ObjectiveOracle& f, const Subset& selected,
                              int beta, const SolverOptions& options) {
    switch (options.removal) {
        case RemovalMethod::kExact:
            return exact_removal(f, selected, beta, options.removal_cap);
        case RemovalMethod::kGreedy:
            return greedy_removal(f, selected, beta);
        case RemovalMethod::kAuto:
            break;
    }
    const int k = std::min(beta, selected.size());
    if (binomial(selected.size(), k) <= options.removal_cap) {
        return exact_removal(f, selected, beta, options.removal_cap);
    }
    return greedy_removal(f, selected, beta);
}

SolveResult finish(std::string name, const ProblemInstance& instance,
                   Subset selected, Subset a1, Subset a2,
                   long long selection_evals, const SolverOptions& options) {
    SolveResult result;
    result.solver_name = std::move(name);
    result.selected = std::move(selected);
    result.a1 = std::move(a1);
    result.a2 = std::move(a2);
    result.eval_count = selection_evals;
    result.worst_removal = certify_removal(instance.oracle(), result.selected,
                                           instance.beta(), options);
    result.residual_value = result.worst_removal.residual_value;
    return result;
}

}  // namespace

Subset plain_greedy(const ObjectiveOracle& f, const Subset& candidates, int k) {
    if (candidates.parent_size() != f.ground_size()) {
        throw InvalidInputError(
            "candidate universe size " +
            std::to_string(candidates.parent_size()) +
            " does not match the oracle ground set size " +
            std::to_string(f.ground_size()));
    }
    if (k < 0 || k > candidates.size()) {
        throw InvalidInputError("cannot pick " + std::to_string(k) +
                                " elements from " +
                                std::to_string(candidates.size()) +
                                " candidates");
    }
    Subset chosen = Subset::empty(f.ground_size());
    Subset pool = candidates;
    for (int round = 0; round < k; ++round) {
        int best = -1;
        double best_value = -std::numeric_limits<double>::infinity();
        for (int y : pool) {
            // Maximizing f(chosen + y) maximizes the marginal gain; one
            // evaluation per candidate since f(chosen) is fixed.
            double value = f.evaluate(chosen.with(y));
            if (value > best_value) {
                best_value = value;
                best = y;
            }
        }
        chosen = chosen.with(best);
        pool = pool.without(best);
    }
    return chosen;
}

SolveResult resilient_greedy(const ProblemInstance& instance,
                             const SolverOptions& options) {
    const ObjectiveOracle& f = instance.oracle();
    const int m = instance.ground_size();
    const long long start = f.eval_count();

    std::vector<int> order = rank_by_singleton(f);
    std::vector<int> bait(order.begin(), order.begin() + instance.beta());
    Subset a1(std::move(bait), m);
    Subset a2 = plain_greedy(f, a1.complement(),
                             instance.alpha() - instance.beta());
    Subset selected = a1.union_with(a2);
    long long selection_evals = f.eval_count() - start;
    return finish("resilient", instance, std::move(selected), std::move(a1),
                  std::move(a2), selection_evals, options);
}

SolveResult exact_maxmin(const ProblemInstance& instance, uint64_t cap) {
    const ObjectiveOracle& f = instance.oracle();
    const int m = instance.ground_size();
    const int alpha = instance.alpha();
    const int beta = instance.beta();

    const uint64_t outer = binomial(m, alpha);
    const uint64_t inner = binomial(alpha, beta);
    if (inner == 0 || outer > cap / inner) {
        throw CapacityError(
            "exact solve would use about " + std::to_string(outer) + " * " +
            std::to_string(inner) + " oracle evaluations, above the cap of " +
            std::to_string(cap));
    }

    const long long start = f.eval_count();
    SolveResult result;
    result.solver_name = "exact";
    double best_value = -std::numeric_limits<double>::infinity();
    bool found = false;
    for_each_combination(m, alpha, [&](const std::vector<int>& combo) {
        Subset candidate(combo, m);
        RemovalResult removal = exact_removal(f, candidate, beta, cap);
        if (!found || removal.residual_value > best_value) {
            found = true;
            best_value = removal.residual_value;
            result.selected = candidate;
            result.worst_removal = removal;
        }
    });

    result.a1 = Subset::empty(m);
    result.a2 = result.selected;
    result.residual_value = result.worst_removal.residual_value;
    result.eval_count = f.eval_count() - start;
    return result;
}

SolveResult baseline_greedy(const ProblemInstance& instance,
                            const SolverOptions& options) {
    const ObjectiveOracle& f = instance.oracle();
    const int m = instance.ground_size();
    const long long start = f.eval_count();
    Subset selected = plain_greedy(f, Subset::full(m), instance.alpha());
    long long selection_evals = f.eval_count() - start;
    return finish("greedy", instance, selected, Subset::empty(m), selected,
                  selection_evals, options);
}

SolveResult baseline_top_alpha(const ProblemInstance& instance,
                               const SolverOptions& options) {
    const ObjectiveOracle& f = instance.oracle();
    const int m = instance.ground_size();
    const long long start = f.eval_count();
    std::vector<int> order = rank_by_singleton(f);
    std::vector<int> top(order.begin(), order.begin() + instance.alpha());
    Subset selected(std::move(top), m);
    long long selection_evals = f.eval_count() - start;
    return finish("top", instance, selected, Subset::empty(m), selected,
                  selection_evals, options);
}

SolveResult baseline_random(const ProblemInstance& instance, uint64_t seed,
                            const SolverOptions& options) {
    const int m = instance.ground_size();
    Rng rng(seed);
    // Partial Fisher-Yates shuffle: the first alpha slots become a
    // uniformly random alpha-subset.
    std::vector<int> pool(static_cast<std::size_t>(m));
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < instance.alpha(); ++i) {
        int j = i + rng.next_index(m - i);
        std::swap(pool[static_cast<std::size_t>(i)],
                  pool[static_cast<std::size_t>(j)]);
    }
    std::vector<int> picked(pool.begin(), pool.begin() + instance.alpha());
    Subset selected(std::move(picked), m);
    return finish("random", instance, selected, Subset::empty(m), selected, 0,
                  options);
}

}  // namespace resmax
