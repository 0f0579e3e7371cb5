#pragma once

#include <cstdint>
#include <string_view>

#include "liegeo/linalg.hpp"

namespace liegeo {

// SplitMix64. Used instead of <random> so that sampled values are identical
// across standard libraries and platforms; reports must be byte-reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

private:
    std::uint64_t state_;
};

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t scramble(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Per-sample stream: randomness depends only on (seed, tag, index), so adding
// new formulas or reordering evaluation never perturbs existing samples.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
    std::uint64_t h = scramble(seed ^ 0x6c62272e07bb0142ULL);
    h = scramble(h ^ fnv1a(tag));
    h = scramble(h ^ index);
    return h;
}

inline Vec random_vector(SplitMix64& rng, std::size_t n, double lo = -1.0, double hi = 1.0) {
    Vec v(n);
    for (double& x : v) x = rng.uniform(lo, hi);
    return v;
}

}  // namespace liegeo
