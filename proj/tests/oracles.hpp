#pragma once

// Test-only reference routines. None of these share code paths with the
// library functions they check.

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "pivot_buffon/geometry.hpp"

namespace pivot_buffon::testing {

/// Crossings of the segment from height y0 to y1 with lines y = m d, found by
/// walking every candidate line and solving y0 + t (y1 - y0) = m d for t.
/// The lower endpoint of the segment is excluded, the upper one included.
inline std::int64_t brute_force_segment(double y0, double y1, double d) {
    if (y0 == y1) {
        return 0;
    }
    const bool rising = y1 > y0;
    std::int64_t hits = 0;
    const auto first = static_cast<std::int64_t>(std::floor(std::min(y0, y1) / d)) - 2;
    const auto last = static_cast<std::int64_t>(std::ceil(std::max(y0, y1) / d)) + 2;
    for (std::int64_t m = first; m <= last; ++m) {
        const double level = static_cast<double>(m) * d;
        if (level == y0) {
            hits += rising ? 0 : 1;
            continue;
        }
        if (level == y1) {
            hits += rising ? 1 : 0;
            continue;
        }
        const double t = (level - y0) / (y1 - y0);
        if (t > 0.0 && t < 1.0) {
            ++hits;
        }
    }
    return hits;
}

inline std::int64_t brute_force_crossings(const PivotNeedle& needle, const Lattice& lattice,
                                          const ThrowSample& t) {
    const double d = lattice.spacing();
    const double ay = t.y + needle.a() * std::sin(t.alpha);
    const double by = t.y + needle.b() * std::sin(t.beta);
    return brute_force_segment(t.y, ay, d) + brute_force_segment(t.y, by, d);
}

/// Wilson bounds as the two roots of |p_hat - p| = z sqrt(p (1 - p) / n),
/// located by bisection.
struct WilsonBounds {
    double lo;
    double hi;
};

inline WilsonBounds wilson_by_bisection(std::uint64_t successes, std::uint64_t n, double z) {
    const double nn = static_cast<double>(n);
    const double p_hat = static_cast<double>(successes) / nn;
    auto excess = [&](double p) {
        return (p_hat - p) * (p_hat - p) - z * z * p * (1.0 - p) / nn;
    };
    auto bisect = [&](double inside, double outside) {
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (inside + outside);
            (excess(mid) <= 0.0 ? inside : outside) = mid;
        }
        return 0.5 * (inside + outside);
    };
    const double lo = successes == 0 ? 0.0 : bisect(p_hat, 0.0);
    const double hi = successes == n ? 1.0 : bisect(p_hat, 1.0);
    return {lo, hi};
}

}  // namespace pivot_buffon::testing
