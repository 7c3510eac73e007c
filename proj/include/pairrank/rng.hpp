#pragma once

#include <cstdint>

namespace pairrank {

/// Counter-based random streams: every draw is addressed by an explicit key,
/// so any rollout can be reproduced in isolation and group members can be
/// realized in parallel with order-independent results.
namespace rng {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

enum class Purpose : std::uint64_t {
    BankShuffle = 1,
    BinChoice = 2,
    CorrectnessDraw = 3,
    QualityNoise = 4,
};

struct StreamKey {
    std::uint64_t seed = 0;
    std::uint64_t step = 0;
    std::uint64_t question = 0;
    std::uint64_t member = 0;
    Purpose purpose = Purpose::BinChoice;
    std::uint64_t draw = 0;

    constexpr std::uint64_t hash() const {
        std::uint64_t h = splitmix64(seed);
        h = splitmix64(h ^ step);
        h = splitmix64(h ^ question);
        h = splitmix64(h ^ member);
        h = splitmix64(h ^ static_cast<std::uint64_t>(purpose));
        h = splitmix64(h ^ draw);
        return h;
    }
};

/// Uniform double in [0, 1) from the key's 53 high bits.
inline double uniform01(const StreamKey& key) {
    return static_cast<double>(key.hash() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(const StreamKey& key, double p) { return uniform01(key) < p; }

/// Uniform double in [-amplitude, amplitude).
inline double symmetric_uniform(const StreamKey& key, double amplitude) {
    return (2.0 * uniform01(key) - 1.0) * amplitude;
}

}  // namespace rng
}  // namespace pairrank
