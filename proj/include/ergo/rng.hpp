#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace ergo {

// All randomness in the library flows through mt19937_64 plus the helpers
// below. std::uniform_int_distribution and friends are not pinned across
// standard libraries, so we keep our own mappings for reproducible streams.
using Rng = std::mt19937_64;

// splitmix64 finalizer; stream i of a run uses seed' = mix64(seed, i).
inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
    return Rng(mix64(seed, stream));
}

// Uniform on [0,1) with 53 random bits.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased uniform integer in [0, bound) via rejection. bound >= 1.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = rng();
        if (x >= threshold) return x % bound;
    }
}

inline int uniform_int(Rng& rng, int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Fisher-Yates; used instead of std::shuffle for pinned draw order.
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

// Robert Floyd's algorithm: k distinct values from [0, universe), returned sorted.
std::vector<std::uint64_t> sample_distinct(Rng& rng, std::uint64_t universe, std::uint64_t k);

}  // namespace ergo
