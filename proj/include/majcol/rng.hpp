#pragma once

#include <cstdint>
#include <random>

namespace majcol {

// All randomness in the library flows through mt19937_64 seeded via
// std::seed_seq. Both are pinned bit-for-bit by the standard, so a given
// (seed, stream, index) triple produces the same values on every platform.
// std::uniform_*_distribution is avoided on purpose: its output is
// implementation-defined.

enum RngStream : std::uint32_t {
    rng_stream_tournament = 1,
    rng_stream_digraph = 2,
    rng_stream_trial = 3,
    rng_stream_initial = 4,
    rng_stream_lists = 5,
    rng_stream_shuffle = 6,
};

inline std::mt19937_64 seeded_rng(std::uint64_t seed, std::uint32_t stream,
                                  std::uint64_t index = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      stream,
                      static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

// Unbiased integer in [0, n) by rejection.
inline std::uint64_t rng_below(std::mt19937_64& g, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t r = g();
        if (r >= threshold) return r % n;
    }
}

// Uniform double in [0, 1) with 53 random bits.
inline double rng_unit(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

}  // namespace majcol
