#pragma once

#include <cstdint>
#include <random>

namespace resmax {

/// SplitMix64 finalizer. Used to derive well-mixed seeds from structured
/// integers; the mapping is pinned so derived streams stay stable.
uint64_t mix64(uint64_t z);

/// Deterministic random source. All mappings from raw 64-bit draws to
/// indices and variates are implemented here rather than with the
/// standard distributions, whose output sequences are not pinned by the
/// standard; the same seed therefore yields the same stream everywhere
/// the underlying libm agrees.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit();

    /// Uniform integer in [0, n); n must be positive. Rejection sampling,
    /// so the result is exactly uniform.
    int next_index(int n);

    /// Standard normal variate via the Box-Muller transform.
    double next_normal();

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace resmax
