#include "resmax/oracle.hpp"

#include <string>

#include "resmax/errors.hpp"

namespace resmax {

void ObjectiveOracle::require_compatible(const Subset& a) const {
    if (a.parent_size() != ground_size()) {
        throw InvalidInputError(
            "subset over a universe of size " + std::to_string(a.parent_size()) +
            " passed to an oracle with ground set size " +
            std::to_string(ground_size()));
    }
}

double marginal_gain(const ObjectiveOracle& f, int x, const Subset& base) {
    if (x < 0 || x >= f.ground_size()) {
        throw InvalidInputError("element " + std::to_string(x) +
                                " is outside the ground set of size " +
                                std::to_string(f.ground_size()));
    }
    if (base.contains(x)) {
        throw InvalidInputError("element " + std::to_string(x) +
                                " is already in the base set");
    }
    double with_x = f.evaluate(base.with(x));
    double without_x = f.evaluate(base);
    return with_x - without_x;
}

MemoizedOracle::MemoizedOracle(std::shared_ptr<const ObjectiveOracle> inner)
    : inner_(std::move(inner)) {
    if (!inner_) {
        throw InvalidInputError("memoized oracle requires a non-null inner oracle");
    }
}

MemoizedOracle::MemoizedOracle(const ObjectiveOracle& inner)
    : inner_(std::shared_ptr<const ObjectiveOracle>(
          std::shared_ptr<const ObjectiveOracle>(), &inner)) {}

int MemoizedOracle::ground_size() const { return inner_->ground_size(); }

long long MemoizedOracle::hit_count() const {
    std::lock_guard<std::mutex> lock(mu_);
    return hits_;
}

long long MemoizedOracle::miss_count() const {
    std::lock_guard<std::mutex> lock(mu_);
    return misses_;
}

std::size_t MemoizedOracle::MemberHash::operator()(
    const std::vector<int>& members) const {
    // FNV-1a over the member indices.
    std::size_t h = 1469598103934665603ULL;
    for (int v : members) {
        h ^= static_cast<std::size_t>(static_cast<unsigned int>(v));
        h *= 1099511628211ULL;
    }
    return h;
}

double MemoizedOracle::value_of(const Subset& a) const {
    require_compatible(a);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(a.members());
        if (it != cache_.end()) {
            ++hits_;
            return it->second;
        }
    }
    double value = inner_->evaluate(a);
    std::lock_guard<std::mutex> lock(mu_);
    ++misses_;
    auto [it, inserted] = cache_.emplace(a.members(), value);
    return it->second;
}

}  // namespace resmax
