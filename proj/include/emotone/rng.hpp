#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <string_view>
#include <vector>

// All sampling in this project flows through the helpers below so that a
// fixed seed yields bit-identical draws on every platform. The generator is
// std::mt19937_64 (its output sequence is pinned by the standard); bounded
// draws use rejection sampling instead of std::uniform_int_distribution,
// whose mapping is implementation-defined.

namespace emotone {

inline constexpr std::uint64_t kFnvOffset = 14695981039346656037ULL;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = kFnvOffset;
    for (unsigned char c : s) {
        h ^= c;
        h *= kFnvPrime;
    }
    return h;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Named sub-seed so pipeline stages can re-run independently yet deterministically.
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view name) {
    return splitmix64(base ^ fnv1a64(name));
}

inline std::uint64_t derive_seed(std::uint64_t base, std::string_view name, std::uint64_t index) {
    return splitmix64(derive_seed(base, name) ^ splitmix64(index));
}

// Uniform integer in [0, n) via rejection sampling on the raw 64-bit stream.
inline std::uint64_t bounded_uniform(std::mt19937_64& gen, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
        const std::uint64_t r = gen();
        if (r >= threshold) return r % n;
    }
}

// Indices of k draws without replacement from [0, n), in draw order
// (partial Fisher-Yates over an index vector).
inline std::vector<std::size_t> sample_without_replacement(std::mt19937_64& gen, std::size_t n,
                                                           std::size_t k) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(bounded_uniform(gen, n - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace emotone
