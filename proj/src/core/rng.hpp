#pragma once

#include <cstdint>
#include <random>

namespace tdet {

// The mt19937_64 engine's output sequence is pinned by the standard, but the
// standard distributions are not, so uniforms are built from raw bits here to
// keep sampling byte-identical across toolchains.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

// splitmix64 finalizer over a golden-ratio stride: decorrelates per-sample
// seeds derived from (base seed, index) so batch partitioning is order-free.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

} // namespace tdet
