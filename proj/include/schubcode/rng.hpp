#pragma once

// Seedable deterministic RNG for experiments: SplitMix64 (Steele, Lea &
// Flood).  State advances by the golden-gamma constant and the output mixes
// with two xor-shift-multiply rounds.  Per-trial generators are derived from
// (seed, counter) so that trial results do not depend on execution order.

#include <cstdint>

namespace schubcode {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound), bound > 0; rejection keeps it unbiased.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

private:
    std::uint64_t state_;
};

/// Independent stream for trial `counter` of a seeded run.
inline SplitMix64 derive_rng(std::uint64_t seed, std::uint64_t counter) {
    SplitMix64 mix(seed ^ (0xA0761D6478BD642FULL * (counter + 1)));
    return SplitMix64(mix.next());
}

}  // namespace schubcode
