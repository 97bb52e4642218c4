#include "resmax/adversary.hpp"

#include <limits>
#include <string>

#include "resmax/combinatorics.hpp"
#include "resmax/errors.hpp"

namespace resmax {

namespace {

void require_valid_removal_args(const ObjectiveOracle& f, const Subset& a,
                                int beta) {
    if (beta < 0) {
        throw InvalidInputError("removal budget must be non-negative, got " +
                                std::to_string(beta));
    }
    if (a.parent_size() != f.ground_size()) {
        throw InvalidInputError(
            "subset universe size " + std::to_string(a.parent_size()) +
            " does not match the oracle ground set size " +
            std::to_string(f.ground_size()));
    }
}

}  // namespace

RemovalResult exact_removal(const ObjectiveOracle& f, const Subset& a, int beta,
                            uint64_t cap) {
    require_valid_removal_args(f, a, beta);
    const int k = std::min(beta, a.size());
    const uint64_t count = binomial(a.size(), k);
    if (count > cap) {
        throw CapacityError("exact removal would enumerate " +
                            std::to_string(count) + " subsets, above the cap of " +
                            std::to_string(cap));
    }

    const long long start = f.eval_count();
    const std::vector<int>& members = a.members();
    RemovalResult best;
    double best_value = std::numeric_limits<double>::infinity();
    std::vector<int> removed_members(static_cast<std::size_t>(k));
    std::vector<int> kept;
    kept.reserve(members.size());
    for_each_combination(a.size(), k, [&](const std::vector<int>& positions) {
        kept.clear();
        std::size_t next = 0;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (next < positions.size() &&
                static_cast<std::size_t>(positions[next]) == i) {
                removed_members[next] = members[i];
                ++next;
            } else {
                kept.push_back(members[i]);
            }
        }
        double value = f.evaluate(Subset(kept, a.parent_size()));
        if (value < best_value) {
            best_value = value;
            best.removed = Subset(removed_members, a.parent_size());
            best.residual_value = value;
        }
    });
    best.exact = true;
    best.eval_count_used = f.eval_count() - start;
    return best;
}

RemovalResult greedy_removal(const ObjectiveOracle& f, const Subset& a,
                             int beta) {
    require_valid_removal_args(f, a, beta);
    const int k = std::min(beta, a.size());
    const long long start = f.eval_count();

    Subset current = a;
    std::vector<int> removed;
    removed.reserve(static_cast<std::size_t>(k));
    double residual = 0.0;
    bool have_residual = false;
    for (int round = 0; round < k; ++round) {
        int best_element = -1;
        double best_value = std::numeric_limits<double>::infinity();
        for (int v : current) {
            double value = f.evaluate(current.without(v));
            if (value < best_value) {
                best_value = value;
                best_element = v;
            }
        }
        current = current.without(best_element);
        removed.push_back(best_element);
        residual = best_value;
        have_residual = true;
    }
    if (!have_residual) residual = f.evaluate(current);

    RemovalResult result;
    result.removed = Subset(std::move(removed), a.parent_size());
    result.residual_value = residual;
    result.exact = false;
    result.eval_count_used = f.eval_count() - start;
    return result;
}

}  // namespace resmax
