#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace resmax {

/// Binomial coefficient C(n, k), saturating at UINT64_MAX instead of
/// overflowing. Arguments outside 0 <= k <= n yield 0.
uint64_t binomial(int n, int k);

/// Visits every k-subset of {0, .., n-1} in lexicographic order. The
/// callback receives the current combination as sorted indices; it must
/// not retain the reference.
void for_each_combination(int n, int k,
                          const std::function<void(const std::vector<int>&)>& visit);

}  // namespace resmax
