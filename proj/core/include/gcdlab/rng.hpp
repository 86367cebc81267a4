#pragma once

// Seeded generator with a fixed integer-range mapping, so sampled
// experiments reproduce bit-for-bit across standard library builds.

#include <cstdint>
#include <random>

namespace gcdlab {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi] by rejection sampling.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
        if (span == UINT64_MAX) return static_cast<std::int64_t>(next());
        const std::uint64_t range = span + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % range);
    }

    bool coin() { return (next() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

}  // namespace gcdlab
