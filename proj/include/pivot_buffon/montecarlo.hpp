#pragma once

/// \file montecarlo.hpp
/// \brief Seeded simulation of random pivot-needle throws.
///
/// Throw t consumes draws [D t, D t + D) of the CounterStream for the run's
/// seed, with D = 3 for a free throw (y, alpha, beta in that order) and D = 2
/// for a fixed-angle throw (y, alpha; beta = alpha + phi). The throws are split
/// into n_chunks contiguous ranges, each of which seeks its own stream to its
/// first draw. Tallies are integer sums, so a report depends only on
/// (needle, lattice, n_throws, seed, phi), never on n_chunks or scheduling.
///
/// serial::run is the reference implementation that walks the chunks in order;
/// run distributes the chunks over OpenMP threads.

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "pivot_buffon/geometry.hpp"
#include "pivot_buffon/rng.hpp"

namespace pivot_buffon {

inline constexpr std::uint64_t kMaxThrows = std::uint64_t{1} << 40;

struct SimulationConfig {
    PivotNeedle needle;
    Lattice lattice;
    std::uint64_t n_throws = 1;
    std::uint64_t seed = 0;
    std::uint32_t n_chunks = 1;
    /// Simulate needles with a + b > d instead of refusing them.
    bool allow_long_needle = false;
};

/// Throws InvalidConfigError or ConstraintError.
void validate(const SimulationConfig& config);

struct TallyCounts {
    std::uint64_t c0 = 0;
    std::uint64_t c1 = 0;
    std::uint64_t c2 = 0;
    /// Throws with three or more intersection points.
    std::uint64_t c_other = 0;
    /// Total intersection points over all throws.
    std::uint64_t sum_n = 0;

    std::uint64_t total() const noexcept { return c0 + c1 + c2 + c_other; }

    void record(std::int64_t intersections);

    /// Throws OverflowError if sum_n would wrap.
    TallyCounts& operator+=(const TallyCounts& other);

    friend TallyCounts operator+(TallyCounts lhs, const TallyCounts& rhs) { return lhs += rhs; }
    friend bool operator==(const TallyCounts&, const TallyCounts&) = default;
};

struct ChunkRange {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;

    std::uint64_t size() const noexcept { return end - begin; }
};

/// The first n_throws % n_chunks chunks receive one extra throw.
ChunkRange chunk_range(std::uint64_t n_throws, std::uint32_t n_chunks, std::uint32_t chunk);

inline constexpr std::uint64_t kDrawsPerThrow = 3;
inline constexpr std::uint64_t kDrawsPerFixedAngleThrow = 2;

/// Stream positioned at the first draw of throw `first_throw`.
CounterStream throw_stream(std::uint64_t seed, std::uint64_t first_throw,
                           std::uint64_t draws_per_throw);

/// y ~ U[0, d), alpha, beta ~ U[0, 2pi), independent.
ThrowSample sample_throw(CounterStream& stream, const Lattice& lattice);

/// y ~ U[0, d), alpha ~ U[0, 2pi), beta = alpha + phi.
ThrowSample sample_fixed_angle_throw(CounterStream& stream, const Lattice& lattice, double phi);

/// Tallies an explicit list of throws.
TallyCounts tally_throws(const PivotNeedle& needle, const Lattice& lattice,
                         std::span<const ThrowSample> throws);

/// Simulates throws [range.begin, range.end) of the run described by config.
/// A set `phi` selects fixed-angle throws.
TallyCounts tally_range(const SimulationConfig& config, ChunkRange range,
                        std::optional<double> phi = std::nullopt);

struct EstimateReport {
    TallyCounts counts;
    HitDistribution p_hat;
    /// sqrt(p_hat_i (1 - p_hat_i) / N).
    std::array<double, 3> std_errors{};
    double mean_n_hat = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t n_throws = 0;
    std::optional<double> phi;
};

EstimateReport make_report(const TallyCounts& counts, std::uint64_t seed,
                           std::optional<double> phi = std::nullopt);

EstimateReport run(const SimulationConfig& config);
EstimateReport run_fixed_angle(const SimulationConfig& config, double phi);

namespace serial {

EstimateReport run(const SimulationConfig& config);
EstimateReport run_fixed_angle(const SimulationConfig& config, double phi);

}  // namespace serial

}  // namespace pivot_buffon
