#pragma once

#include <cstdint>

namespace quboml {

// splitmix64 (Steele/Lea/Flood 2014): fixed-increment counter with a 64-bit
// finalizer. Every random draw in this project goes through this generator
// so that datasets, labels, weight inits and training runs are reproducible
// from a single master seed. Recorded in dataset manifests as
// kPrngName/kPrngVersion.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1), 53 significant bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Uniform integer in [0, bound), rejection sampled so there is no modulo
    // bias. bound must be nonzero.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = -bound % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform integer in [lo, hi], inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        next_below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::uint64_t state_;
};

// Seed of the index-th sub-stream of a master seed: the (index+1)-th raw
// output of a splitmix64 stream seeded with `master`. Used to make dataset
// generation order-independent and training stages independently seeded.
inline std::uint64_t sub_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline constexpr const char* kPrngName = "splitmix64";
inline constexpr const char* kPrngVersion = "1";

}  // namespace quboml
