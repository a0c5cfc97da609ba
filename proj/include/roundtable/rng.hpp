#pragma once

// Pinned randomness. Everything here is fully specified so a (seed, samples)
// pair identifies one bit stream forever:
//   - engine: std::mt19937_64, whose output for a given seed the C++ standard
//     fixes exactly;
//   - sub-seeds: SplitMix64 of (master seed, stream salt, batch index);
//   - bounded draws: rejection sampling on the raw 64-bit output --
//     std::uniform_int_distribution is implementation-defined and never used;
//   - batching: samples are split into fixed batches of 65536 regardless of
//     thread count, each batch runs its own engine, and batch tallies are
//     reduced in batch order.

#include <cstdint>
#include <random>
#include <string>

namespace roundtable {

inline constexpr std::int64_t kSamplesPerBatch = 65536;
inline constexpr const char* kRngIdentifier = "mt19937_64+splitmix64/b65536";

// Stream salts keep the per-quantity sample streams disjoint under one master seed.
inline constexpr std::uint64_t kSaltUnmatched = 0x7461626c652d6621ULL;
inline constexpr std::uint64_t kSaltAllMatched = 0x7461626c652d6721ULL;
inline constexpr std::uint64_t kSaltGreedy = 0x7461626c652d6772ULL;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t batch_seed(std::uint64_t master, std::uint64_t salt, std::uint64_t batch) {
    return splitmix64(splitmix64(master ^ salt) + batch);
}

// Uniform draw from [0, k), unbiased via rejection below the largest multiple
// of k that fits in 64 bits.
inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t k) {
    const std::uint64_t threshold = (0 - k) % k;  // 2^64 mod k
    for (;;) {
        const std::uint64_t x = gen();
        if (x >= threshold) return x % k;
    }
}

}  // namespace roundtable
