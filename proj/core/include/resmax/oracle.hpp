#pragma once

#include <atomic>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "resmax/subset.hpp"

namespace resmax {

/// Value oracle for a set function f over a fixed ground set.
///
/// Implementations must be deterministic (the same subset always yields a
/// bit-identical value) and normalized so that f of the empty set is 0.
/// The solvers additionally assume monotonicity and submodularity; those
/// properties are the implementation's contract, not checked here.
///
/// evaluate() bumps eval_count() by exactly one per call. The counter is
/// atomic, so concurrent read-only evaluation is safe whenever the
/// subclass hook is.
class ObjectiveOracle {
public:
    virtual ~ObjectiveOracle() = default;

    double evaluate(const Subset& a) const {
        evals_.fetch_add(1, std::memory_order_relaxed);
        return value_of(a);
    }

    virtual int ground_size() const = 0;

    long long eval_count() const {
        return evals_.load(std::memory_order_relaxed);
    }

protected:
    ObjectiveOracle() = default;
    // Copies are fresh oracles: the evaluation counter starts at zero.
    ObjectiveOracle(const ObjectiveOracle&) noexcept {}
    ObjectiveOracle& operator=(const ObjectiveOracle&) noexcept { return *this; }

    /// Subclass hook, called exactly once per evaluate().
    virtual double value_of(const Subset& a) const = 0;

    /// Throws InvalidInputError unless a belongs to this oracle's universe.
    void require_compatible(const Subset& a) const;

private:
    mutable std::atomic<long long> evals_{0};
};

/// f(base + {x}) - f(base). Costs exactly two oracle evaluations.
/// x must lie in the ground set and outside base.
double marginal_gain(const ObjectiveOracle& f, int x, const Subset& base);

/// Caching wrapper. Values are bit-identical to the inner oracle's and the
/// inner eval_count() advances only on cache misses. The wrapper's own
/// eval_count() still counts every call.
class MemoizedOracle : public ObjectiveOracle {
public:
    /// Shares ownership of the wrapped oracle.
    explicit MemoizedOracle(std::shared_ptr<const ObjectiveOracle> inner);

    /// Non-owning view; the caller keeps inner alive.
    explicit MemoizedOracle(const ObjectiveOracle& inner);

    int ground_size() const override;

    long long hit_count() const;
    long long miss_count() const;
    const ObjectiveOracle& inner() const { return *inner_; }

protected:
    double value_of(const Subset& a) const override;

private:
    struct MemberHash {
        std::size_t operator()(const std::vector<int>& members) const;
    };

    std::shared_ptr<const ObjectiveOracle> inner_;
    mutable std::mutex mu_;
    mutable std::unordered_map<std::vector<int>, double, MemberHash> cache_;
    mutable long long hits_ = 0;
    mutable long long misses_ = 0;
};

}  // namespace resmax
