#include "pivot_buffon/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "pivot_buffon/errors.hpp"

namespace pivot_buffon {

namespace {

using std::numbers::pi;

// Decimal inputs such as a = 0.7, b = 0.3, d = 1 must count as a + b = d.
constexpr double kLengthSlack = 1e-12;

double clamp_probability(double p, const char* name) {
    if (!(p >= -kSimplexTolerance && p <= 1.0 + kSimplexTolerance)) {
        throw InternalConsistencyError(fmt::format("{} = {} is not a probability", name, p));
    }
    return std::clamp(p, 0.0, 1.0);
}

HitDistribution checked(double p0, double p1, double p2, DistributionSource source) {
    const double total = p0 + p1 + p2;
    if (!(std::abs(total - 1.0) <= kSimplexTolerance)) {
        throw InternalConsistencyError(
            fmt::format("hit probabilities sum to {} (p0 = {}, p1 = {}, p2 = {})", total, p0, p1,
                        p2));
    }
    return HitDistribution{clamp_probability(p0, "p0"), clamp_probability(p1, "p1"),
                           clamp_probability(p2, "p2"), source};
}

}  // namespace

Modulus modulus(const PivotNeedle& needle) {
    const double s = needle.total_length();
    return Modulus::from_k_squared(4.0 * needle.a() * needle.b() / (s * s));
}

double mean_chord(const PivotNeedle& needle) {
    return 2.0 * needle.total_length() * complete_e(modulus(needle)) / pi;
}

void require_short_needle(const PivotNeedle& needle, const Lattice& lattice) {
    const double s = needle.total_length();
    const double d = lattice.spacing();
    if (s > d * (1.0 + kLengthSlack)) {
        throw ConstraintError(fmt::format(
            "hit probabilities require a + b <= d, but a + b = {} exceeds d = {}", s, d));
    }
}

double p_union(const PivotNeedle& needle, const Lattice& lattice) {
    require_short_needle(needle, lattice);
    const double e = complete_e(modulus(needle));
    return clamp_probability(
        needle.total_length() * (pi + 2.0 * e) / (pi * pi * lattice.spacing()), "P(A or B)");
}

double p_both(const PivotNeedle& needle, const Lattice& lattice) {
    require_short_needle(needle, lattice);
    const double e = complete_e(modulus(needle));
    return clamp_probability(
        needle.total_length() * (pi - 2.0 * e) / (pi * pi * lattice.spacing()), "P(A and B)");
}

HitDistribution hit_distribution(const PivotNeedle& needle, const Lattice& lattice) {
    require_short_needle(needle, lattice);
    const double e = complete_e(modulus(needle));
    const double scale = needle.total_length() / (pi * pi * lattice.spacing());
    const double any = scale * (pi + 2.0 * e);
    return checked(1.0 - any, 4.0 * e * scale, (pi - 2.0 * e) * scale,
                   DistributionSource::exact);
}

double expected_intersections(const PivotNeedle& needle, const Lattice& lattice) {
    require_short_needle(needle, lattice);
    return 2.0 * needle.total_length() / (pi * lattice.spacing());
}

HitDistribution fixed_angle_distribution(const PivotNeedle& needle, const Lattice& lattice,
                                         double phi) {
    require_short_needle(needle, lattice);
    const double c = chord_length(needle, phi);
    const double s = needle.total_length();
    const double pd = pi * lattice.spacing();
    return checked(1.0 - (s + c) / pd, 2.0 * c / pd, (s - c) / pd,
                   DistributionSource::fixed_angle_exact);
}

}  // namespace pivot_buffon
