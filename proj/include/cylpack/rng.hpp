#pragma once
#include <cstdint>

namespace cylpack {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Small deterministic generator (splitmix64 chain). Identical output on all
/// platforms, unlike the standard-library distributions.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(splitmix64(seed ^ 0xA5A5A5A5DEADBEEFull)) {}

    std::uint64_t next_u64() {
        state = splitmix64(state);
        return state;
    }

    /// Uniform in [0, 1).
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    int uniform_int(int lo, int hi) { // inclusive bounds
        return lo + int(next_u64() % std::uint64_t(hi - lo + 1));
    }
};

/// Per-sample stream value: depends only on (seed, index), so partitioning a
/// sample range across workers cannot change any drawn value.
inline std::uint64_t stream_u64(std::uint64_t seed, std::uint64_t index, std::uint64_t lane) {
    return splitmix64(splitmix64(seed + 0x9E3779B97F4A7C15ull * index) + lane);
}

inline double stream_double(std::uint64_t seed, std::uint64_t index, std::uint64_t lane) {
    return double(stream_u64(seed, index, lane) >> 11) * 0x1.0p-53;
}

} // namespace cylpack
