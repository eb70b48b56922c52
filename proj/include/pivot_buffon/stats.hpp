#pragma once

/// \file stats.hpp
/// \brief Agreement between simulated tallies and exact hit probabilities.
///
/// The exact distribution is a fully specified null hypothesis, so z-scores
/// use the null variance p (1 - p) / N rather than the estimated one.

#include <array>
#include <cstdint>

#include "pivot_buffon/geometry.hpp"
#include "pivot_buffon/montecarlo.hpp"

namespace pivot_buffon::stats {

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
};

/// Wilson score interval for a binomial proportion.
Interval wilson_interval(std::uint64_t successes, std::uint64_t n, double z);

/// (p_hat_i - p_i) / sqrt(p_i (1 - p_i) / N). A component with p_i in {0, 1}
/// has zero null variance: its z is 0 when p_hat_i == p_i and +-inf otherwise.
std::array<double, 3> z_scores(const EstimateReport& report, const HitDistribution& exact);

/// z-score of the mean number of intersections against p1 + 2 p2, using the
/// null variance p1 + 4 p2 - (p1 + 2 p2)^2. Requires c_other == 0.
double mean_count_z(const EstimateReport& report, const HitDistribution& exact);

/// Survival function of the chi-square distribution for dof 1 or 2.
double chi_square_survival(double statistic, int dof);

struct ChiSquareResult {
    double statistic = 0.0;
    int dof = 0;
    double p_value = 1.0;
};

/// Minimum expected count per category.
inline constexpr double kMinExpectedCount = 5.0;

/// Pearson test over the three categories {0, 1, 2}, dof = 2.
///
/// Throws CategoryCollapseError when an exact probability is zero (use
/// chi_square_gof_collapsed), InsufficientCountsError when an expected count
/// is below 5, and DomainError when throws with 3+ intersections were seen.
ChiSquareResult chi_square_gof(const TallyCounts& counts, const HitDistribution& exact);

/// Pearson test over the categories with non-zero exact probability; dof is
/// one less than their number. An observation in a zero-probability category
/// gives an infinite statistic and p-value 0.
ChiSquareResult chi_square_gof_collapsed(const TallyCounts& counts, const HitDistribution& exact);

}  // namespace pivot_buffon::stats
