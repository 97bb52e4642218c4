#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "resmax/adversary.hpp"
#include "resmax/oracle.hpp"
#include "resmax/subset.hpp"

namespace resmax {

/// Default cap on total oracle evaluations for the exact solver.
inline constexpr uint64_t kDefaultExactCap = 100'000'000;

/// One max-min selection problem: pick at most alpha elements so the
/// value after a worst-case removal of up to beta of them stays high.
class ProblemInstance {
public:
    /// Requires 0 <= beta <= alpha <= ground size.
    ProblemInstance(const ObjectiveOracle& oracle, int alpha, int beta);

    const ObjectiveOracle& oracle() const { return *oracle_; }
    int alpha() const { return alpha_; }
    int beta() const { return beta_; }
    int ground_size() const { return oracle_->ground_size(); }

private:
    const ObjectiveOracle* oracle_;
    int alpha_;
    int beta_;
};

/// How a solver certifies its worst-case removal.
enum class RemovalMethod {
    /// Exact when the enumeration fits the cap, greedy otherwise.
    kAuto,
    /// Always exact; throws CapacityError when over the cap.
    kExact,
    /// Always the greedy heuristic.
    kGreedy,
};

struct SolverOptions {
    RemovalMethod removal = RemovalMethod::kAuto;
    uint64_t removal_cap = kDefaultRemovalCap;
};

struct SolveResult {
    std::string solver_name;
    /// The full selected set (a1 plus a2 for the two-phase solver; a1 is
    /// empty and a2 equals selected for every other solver).
    Subset selected;
    Subset a1;
    Subset a2;
    /// Worst-case removal found for the selected set.
    RemovalResult worst_removal;
    /// Value of selected minus worst_removal.removed.
    double residual_value = 0.0;
    /// Oracle evaluations spent selecting (the removal certificate is
    /// accounted separately in worst_removal, except for exact_maxmin
    /// where selection and certification are one enumeration).
    long long eval_count = 0;
};

/// Classic greedy for max f(S) over subsets of the candidate pool with
/// |S| = k, maximizing the marginal value at each step; ties go to the
/// smallest element index. Uses at most |candidates| * k evaluations.
Subset plain_greedy(const ObjectiveOracle& f, const Subset& candidates, int k);

/// Two-phase selection: phase one takes the beta individually best
/// elements as decoys, phase two greedily fills the remaining
/// alpha - beta slots from the rest of the ground set, scoring each
/// candidate only against the phase-two set. Selection uses at most
/// m + m * (alpha - beta) + (alpha - beta) oracle evaluations.
SolveResult resilient_greedy(const ProblemInstance& instance,
                             const SolverOptions& options = {});

/// Exhaustive optimum of the max-min problem: enumerates every
/// alpha-subset and certifies each with exact removal. Ties resolve to
/// the lexicographically smallest selected set. Throws CapacityError if
/// C(m, alpha) * C(alpha, beta) would exceed the cap.
SolveResult exact_maxmin(const ProblemInstance& instance,
                         uint64_t cap = kDefaultExactCap);

/// Greedy for the plain (non-resilient) problem, then certified removal.
SolveResult baseline_greedy(const ProblemInstance& instance,
                            const SolverOptions& options = {});

/// Takes the alpha individually best elements, then certified removal.
SolveResult baseline_top_alpha(const ProblemInstance& instance,
                               const SolverOptions& options = {});

/// Uniformly random alpha-subset drawn from the pinned generator, then
/// certified removal.
SolveResult baseline_random(const ProblemInstance& instance, uint64_t seed,
                            const SolverOptions& options = {});

}  // namespace resmax
