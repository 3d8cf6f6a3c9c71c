#pragma once

// Counter-mode random stream built on SplitMix64.
//
// The generator is stateless: the value for (seed, counter) is
//
//     counter_u64(seed, c) = mix64(seed + (c + 1) * 0x9E3779B97F4A7C15)
//
// where mix64 is the SplitMix64 finalizer. Uniform doubles map the top 53
// bits into the open interval (0,1) via ((x >> 11) + 0.5) * 2^-53, so
// quantile transforms never receive 0 or 1. Both mappings are bit-exact,
// which makes streams reproducible per (seed, counter) and lets parallel
// consumers partition counter ranges instead of sharing generator state.

#include <cstdint>

namespace bp {

constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

constexpr std::uint64_t counter_u64(std::uint64_t seed, std::uint64_t counter) {
    return mix64(seed + (counter + 1) * 0x9E3779B97F4A7C15ull);
}

// Uniform on the open interval (0,1).
constexpr double counter_u01(std::uint64_t seed, std::uint64_t counter) {
    return (static_cast<double>(counter_u64(seed, counter) >> 11) + 0.5) * 0x1.0p-53;
}

// Uniform integer in [0, bound) by 128-bit multiply; bound must be > 0.
constexpr std::uint64_t counter_below(std::uint64_t seed, std::uint64_t counter,
                                      std::uint64_t bound) {
    using u128 = unsigned __int128;
    return static_cast<std::uint64_t>((u128(counter_u64(seed, counter)) * bound) >> 64);
}

}  // namespace bp
