// splitmix64: the one PRNG used for every seeded sample in this project.
// Chosen because the whole algorithm fits in three lines and can be
// re-implemented bit-for-bit anywhere, which keeps seeded reports portable.
#ifndef PISYS_PRNG_HPP
#define PISYS_PRNG_HPP

#include <cstdint>

namespace pisys {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound) by rejection sampling.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t limit = ~0ULL - ~0ULL % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }
};

}  // namespace pisys

#endif
