#pragma once

/// \file rng.hpp
/// \brief Position-addressable SplitMix64 stream.
///
/// Draw j (j = 0, 1, ...) of the stream for seed s is
///
///     key    = mix64(s)
///     u64_j  = mix64(key + (j + 1) * 0x9E3779B97F4A7C15)      (mod 2^64)
///     unit_j = (u64_j >> 11) * 2^-53                          in [0, 1)
///
/// with mix64 the SplitMix64 finaliser
///
///     z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///     z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///     z =  z ^ (z >> 31)
///
/// Every draw is a pure function of (seed, j), so any contiguous range of the
/// stream can be generated independently of all others. This is what makes
/// simulation results independent of how the work is chunked.

#include <cstdint>

namespace pivot_buffon {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Top 53 bits over 2^53.
constexpr double to_unit_interval(std::uint64_t bits) noexcept {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

class CounterStream {
public:
    /// Stream for `seed`, positioned so the next draw is draw number `position`.
    constexpr CounterStream(std::uint64_t seed, std::uint64_t position) noexcept
        : state_(mix64(seed) + position * kGoldenGamma), position_(position) {}

    constexpr std::uint64_t next_u64() noexcept {
        state_ += kGoldenGamma;
        ++position_;
        return mix64(state_);
    }

    constexpr double next_unit() noexcept { return to_unit_interval(next_u64()); }

    constexpr std::uint64_t position() const noexcept { return position_; }

private:
    std::uint64_t state_;
    std::uint64_t position_;
};

}  // namespace pivot_buffon
