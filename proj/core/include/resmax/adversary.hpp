#pragma once

#include <cstdint>

#include "resmax/oracle.hpp"
#include "resmax/subset.hpp"

namespace resmax {

/// Default cap on the number of removal subsets enumerated exactly.
inline constexpr uint64_t kDefaultRemovalCap = 10'000'000;

struct RemovalResult {
    /// The removed elements; always exactly min(beta, |A|) of them.
    Subset removed;
    /// Value of A minus the removed elements.
    double residual_value = 0.0;
    /// True when the removal is a certified worst case.
    bool exact = false;
    long long eval_count_used = 0;
};

/// Certified worst-case removal: enumerates every subset of a of size
/// min(beta, |a|) in lexicographic order and keeps the first minimizer,
/// so ties resolve to the lexicographically smallest removed set.
///
/// Throws CapacityError when the enumeration would exceed cap subsets.
RemovalResult exact_removal(const ObjectiveOracle& f, const Subset& a, int beta,
                            uint64_t cap = kDefaultRemovalCap);

/// Heuristic removal: repeatedly deletes the element whose deletion
/// lowers the value the most (smallest index on ties). The result is a
/// feasible attack, hence an upper bound on the worst-case residual.
RemovalResult greedy_removal(const ObjectiveOracle& f, const Subset& a,
                             int beta);

}  // namespace resmax
