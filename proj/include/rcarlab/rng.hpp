#pragma once

#include <cstdint>
#include <random>

namespace rcarlab {

/// All stochastic code draws from an explicitly passed stream so that results
/// are a pure function of the stream state.
using RngStream = std::mt19937_64;

/// SplitMix64 finalizer. Good avalanche, cheap, stable across platforms.
constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d4a2fa5cb10af1ULL;
    return z ^ (z >> 31);
}

/// Substream id = hash(master_seed, replicate_id, path_index). Streams for
/// distinct tuples are statistically independent and independent of
/// scheduling order.
constexpr std::uint64_t substream_id(std::uint64_t master_seed,
                                     std::uint64_t replicate_id,
                                     std::uint64_t path_index = 0) noexcept {
    std::uint64_t h = splitmix64(master_seed);
    h = splitmix64(h ^ replicate_id);
    h = splitmix64(h ^ path_index);
    return h;
}

/// Derive a deterministic substream for (seed, replicate, path).
inline RngStream substream(std::uint64_t master_seed, std::uint64_t replicate_id,
                           std::uint64_t path_index = 0) {
    const std::uint64_t id = substream_id(master_seed, replicate_id, path_index);
    std::seed_seq seq{static_cast<std::uint32_t>(id), static_cast<std::uint32_t>(id >> 32),
                      static_cast<std::uint32_t>(splitmix64(id)),
                      static_cast<std::uint32_t>(splitmix64(id) >> 32)};
    return RngStream(seq);
}

/// Uniform on (0, 1]: never returns 0, so logs and negative powers are safe.
inline double uniform_pos(RngStream& rng) {
    // 53-bit mantissa draw in (0,1].
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

/// Uniform on (0, 1).
inline double uniform_open(RngStream& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace rcarlab
