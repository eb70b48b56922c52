#include "pivot_buffon/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "pivot_buffon/errors.hpp"

namespace pivot_buffon::stats {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::array<std::uint64_t, 3> observed(const TallyCounts& counts) {
    if (counts.c_other != 0) {
        throw DomainError(fmt::format(
            "{} throws had three or more intersections; the three-category test does not apply",
            counts.c_other));
    }
    return {counts.c0, counts.c1, counts.c2};
}

}  // namespace

Interval wilson_interval(std::uint64_t successes, std::uint64_t n, double z) {
    if (n == 0 || successes > n || !(z > 0.0)) {
        throw DomainError(fmt::format(
            "Wilson interval needs 0 <= successes <= n, n >= 1, z > 0 (got {}, {}, {})", successes,
            n, z));
    }
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(successes) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = (p + z2 / (2.0 * nn)) / denom;
    const double half = z / denom * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
    Interval out{std::max(0.0, center - half), std::min(1.0, center + half)};
    if (successes == 0) out.lo = 0.0;
    if (successes == n) out.hi = 1.0;
    // Rounding must never push the bounds past the point estimate.
    out.lo = std::min(out.lo, p);
    out.hi = std::max(out.hi, p);
    return out;
}

std::array<double, 3> z_scores(const EstimateReport& report, const HitDistribution& exact) {
    const double n = static_cast<double>(report.n_throws);
    std::array<double, 3> z{};
    for (int i = 0; i < 3; ++i) {
        const double p = exact[i];
        const double diff = report.p_hat[i] - p;
        const double var = p * (1.0 - p) / n;
        if (var > 0.0) {
            z[i] = diff / std::sqrt(var);
        } else {
            z[i] = diff == 0.0 ? 0.0 : std::copysign(kInf, diff);
        }
    }
    return z;
}

double mean_count_z(const EstimateReport& report, const HitDistribution& exact) {
    observed(report.counts);
    const double mean = exact.p1 + 2.0 * exact.p2;
    const double var = exact.p1 + 4.0 * exact.p2 - mean * mean;
    const double diff = report.mean_n_hat - mean;
    if (!(var > 0.0)) {
        return diff == 0.0 ? 0.0 : std::copysign(kInf, diff);
    }
    return diff / std::sqrt(var / static_cast<double>(report.n_throws));
}

double chi_square_survival(double statistic, int dof) {
    if (std::isnan(statistic) || statistic < 0.0) {
        throw DomainError(fmt::format("chi-square statistic must be >= 0, got {}", statistic));
    }
    switch (dof) {
        case 1:
            return std::erfc(std::sqrt(0.5 * statistic));
        case 2:
            return std::exp(-0.5 * statistic);
        default:
            throw DomainError(fmt::format("chi-square survival is only provided for dof 1 and 2, "
                                          "got {}",
                                          dof));
    }
}

ChiSquareResult chi_square_gof(const TallyCounts& counts, const HitDistribution& exact) {
    const auto obs = observed(counts);
    const double n = static_cast<double>(counts.total());
    double statistic = 0.0;
    for (int i = 0; i < 3; ++i) {
        if (exact[i] == 0.0) {
            throw CategoryCollapseError(fmt::format(
                "p{} = 0 leaves an empty category; use the collapsed test over the remaining "
                "categories",
                i));
        }
        const double expected = n * exact[i];
        if (expected < kMinExpectedCount) {
            throw InsufficientCountsError(fmt::format(
                "expected count {:.3g} for category {} is below {}; increase the number of throws",
                expected, i, kMinExpectedCount));
        }
        const double diff = static_cast<double>(obs[i]) - expected;
        statistic += diff * diff / expected;
    }
    return ChiSquareResult{statistic, 2, chi_square_survival(statistic, 2)};
}

ChiSquareResult chi_square_gof_collapsed(const TallyCounts& counts, const HitDistribution& exact) {
    const auto obs = observed(counts);
    const double n = static_cast<double>(counts.total());
    double statistic = 0.0;
    int categories = 0;
    for (int i = 0; i < 3; ++i) {
        if (exact[i] == 0.0) {
            if (obs[i] != 0) {
                statistic = kInf;
            }
            continue;
        }
        ++categories;
        const double expected = n * exact[i];
        if (expected < kMinExpectedCount) {
            throw InsufficientCountsError(fmt::format(
                "expected count {:.3g} for category {} is below {}; increase the number of throws",
                expected, i, kMinExpectedCount));
        }
        const double diff = static_cast<double>(obs[i]) - expected;
        statistic += diff * diff / expected;
    }
    const int dof = categories - 1;
    if (dof < 1) {
        throw CategoryCollapseError("fewer than two categories with non-zero probability");
    }
    const double p_value = std::isinf(statistic) ? 0.0 : chi_square_survival(statistic, dof);
    return ChiSquareResult{statistic, dof, p_value};
}

}  // namespace pivot_buffon::stats
