#include "resmax/combinatorics.hpp"

#include "resmax/errors.hpp"

namespace resmax {

uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (c > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<uint64_t>(c);
}

void for_each_combination(
    int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
    if (n < 0 || k < 0 || k > n) {
        throw InvalidInputError("combination parameters must satisfy 0 <= k <= n");
    }
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        visit(idx);
        // Advance to the next combination in lexicographic order.
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

}  // namespace resmax
