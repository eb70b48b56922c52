#include "pivot_buffon/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "pivot_buffon/closed_form.hpp"
#include "pivot_buffon/errors.hpp"

namespace pivot_buffon {

namespace {

template <class Sampler>
TallyCounts tally_with(const SimulationConfig& config, ChunkRange range, Sampler&& sample) {
    TallyCounts tally;
    for (std::uint64_t i = range.begin; i < range.end; ++i) {
        tally.record(count_intersections(config.needle, config.lattice, sample()));
    }
    return tally;
}

}  // namespace

void validate(const SimulationConfig& config) {
    if (config.n_throws < 1 || config.n_throws > kMaxThrows) {
        throw InvalidConfigError(fmt::format("number of throws must be in [1, 2^40], got {}",
                                             config.n_throws));
    }
    if (config.n_chunks < 1) {
        throw InvalidConfigError("number of chunks must be at least 1");
    }
    if (!config.allow_long_needle) {
        require_short_needle(config.needle, config.lattice);
    }
}

void TallyCounts::record(std::int64_t intersections) {
    switch (intersections) {
        case 0:
            ++c0;
            break;
        case 1:
            ++c1;
            break;
        case 2:
            ++c2;
            break;
        default:
            ++c_other;
            break;
    }
    const auto n = static_cast<std::uint64_t>(intersections);
    if (n > std::numeric_limits<std::uint64_t>::max() - sum_n) {
        throw OverflowError("intersection total overflowed 64 bits");
    }
    sum_n += n;
}

TallyCounts& TallyCounts::operator+=(const TallyCounts& other) {
    if (other.sum_n > std::numeric_limits<std::uint64_t>::max() - sum_n) {
        throw OverflowError("intersection total overflowed 64 bits");
    }
    c0 += other.c0;
    c1 += other.c1;
    c2 += other.c2;
    c_other += other.c_other;
    sum_n += other.sum_n;
    return *this;
}

ChunkRange chunk_range(std::uint64_t n_throws, std::uint32_t n_chunks, std::uint32_t chunk) {
    const std::uint64_t base = n_throws / n_chunks;
    const std::uint64_t extra = n_throws % n_chunks;
    const std::uint64_t begin = chunk * base + std::min<std::uint64_t>(chunk, extra);
    return ChunkRange{begin, begin + base + (chunk < extra ? 1 : 0)};
}

CounterStream throw_stream(std::uint64_t seed, std::uint64_t first_throw,
                           std::uint64_t draws_per_throw) {
    return CounterStream(seed, first_throw * draws_per_throw);
}

ThrowSample sample_throw(CounterStream& stream, const Lattice& lattice) {
    const double d = lattice.spacing();
    ThrowSample t;
    t.y = d * stream.next_unit();
    t.alpha = kTwoPi * stream.next_unit();
    t.beta = kTwoPi * stream.next_unit();
    // The products may round up onto the open end of the interval.
    if (t.y >= d) t.y = 0.0;
    if (t.alpha >= kTwoPi) t.alpha = 0.0;
    if (t.beta >= kTwoPi) t.beta = 0.0;
    return t;
}

ThrowSample sample_fixed_angle_throw(CounterStream& stream, const Lattice& lattice, double phi) {
    const double d = lattice.spacing();
    ThrowSample t;
    t.y = d * stream.next_unit();
    t.alpha = kTwoPi * stream.next_unit();
    if (t.y >= d) t.y = 0.0;
    if (t.alpha >= kTwoPi) t.alpha = 0.0;
    t.beta = reduce_angle(t.alpha + phi);
    return t;
}

TallyCounts tally_throws(const PivotNeedle& needle, const Lattice& lattice,
                         std::span<const ThrowSample> throws) {
    TallyCounts tally;
    for (const auto& t : throws) {
        tally.record(count_intersections(needle, lattice, t));
    }
    return tally;
}

TallyCounts tally_range(const SimulationConfig& config, ChunkRange range,
                        std::optional<double> phi) {
    if (phi) {
        auto stream = throw_stream(config.seed, range.begin, kDrawsPerFixedAngleThrow);
        const double fixed = *phi;
        return tally_with(config, range, [&] {
            return sample_fixed_angle_throw(stream, config.lattice, fixed);
        });
    }
    auto stream = throw_stream(config.seed, range.begin, kDrawsPerThrow);
    return tally_with(config, range, [&] { return sample_throw(stream, config.lattice); });
}

EstimateReport make_report(const TallyCounts& counts, std::uint64_t seed,
                           std::optional<double> phi) {
    EstimateReport report;
    report.counts = counts;
    report.seed = seed;
    report.n_throws = counts.total();
    report.phi = phi;
    if (report.n_throws == 0) {
        throw InvalidConfigError("cannot build an estimate from zero throws");
    }
    const auto n = static_cast<double>(report.n_throws);
    report.p_hat = HitDistribution{static_cast<double>(counts.c0) / n,
                                   static_cast<double>(counts.c1) / n,
                                   static_cast<double>(counts.c2) / n,
                                   DistributionSource::monte_carlo};
    for (int i = 0; i < 3; ++i) {
        const double p = report.p_hat[i];
        report.std_errors[i] = std::sqrt(p * (1.0 - p) / n);
    }
    report.mean_n_hat = static_cast<double>(counts.sum_n) / n;
    return report;
}

}  // namespace pivot_buffon
