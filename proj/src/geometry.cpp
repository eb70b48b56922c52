#include "pivot_buffon/geometry.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "pivot_buffon/errors.hpp"

namespace pivot_buffon {

double reduce_angle(double phi) {
    double r = std::fmod(phi, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    // fmod is exact, but the shift above can round up onto 2pi.
    return r >= kTwoPi ? 0.0 : r;
}

PivotNeedle::PivotNeedle(double a, double b) : a_(a), b_(b) {
    if (!std::isfinite(a) || !std::isfinite(b) || a < 0.0 || b < 0.0) {
        throw DomainError(
            fmt::format("segment lengths must be finite and non-negative (a = {}, b = {})", a, b));
    }
    if (a + b == 0.0) {
        throw DegenerateNeedleError("needle with a + b = 0 has no extent");
    }
}

Lattice::Lattice(double spacing) : d_(spacing) {
    if (!std::isfinite(spacing) || spacing <= 0.0) {
        throw DomainError(fmt::format("line spacing d must be positive, got {}", spacing));
    }
}

ThrowSample ThrowSample::reduced(const Lattice& lattice, double y, double alpha, double beta) {
    const double d = lattice.spacing();
    double ry = std::fmod(y, d);
    if (ry < 0.0) {
        ry += d;
    }
    if (ry >= d) {
        ry = 0.0;
    }
    return ThrowSample{ry, reduce_angle(alpha), reduce_angle(beta)};
}

VertexHeights vertex_heights(const PivotNeedle& needle, const ThrowSample& t) {
    return VertexHeights{t.y, t.y + needle.a() * std::sin(t.alpha),
                         t.y + needle.b() * std::sin(t.beta)};
}

std::string_view to_string(DistributionSource source) {
    switch (source) {
        case DistributionSource::exact:
            return "exact";
        case DistributionSource::fixed_angle_exact:
            return "fixed_angle_exact";
        case DistributionSource::monte_carlo:
            return "monte_carlo";
    }
    return "unknown";
}

double chord_length(const PivotNeedle& needle, double phi) {
    const double a = needle.a();
    const double b = needle.b();
    // (a - b)^2 + 4ab sin^2(phi/2) is the law of cosines without the
    // cancellation of a^2 + b^2 - 2ab cos(phi) near phi = 0.
    const double half_sin = std::sin(0.5 * reduce_angle(phi));
    const double c = std::sqrt((a - b) * (a - b) + 4.0 * a * b * half_sin * half_sin);
    return std::clamp(c, std::abs(a - b), a + b);
}

double hull_perimeter(const PivotNeedle& needle, double phi) {
    return needle.total_length() + chord_length(needle, phi);
}

std::int64_t lines_in_half_open(double lo, double hi, double spacing) {
    return static_cast<std::int64_t>(std::floor(hi / spacing)) -
           static_cast<std::int64_t>(std::floor(lo / spacing));
}

std::int64_t segment_crossings(double y0, double y1, double spacing) {
    return y0 <= y1 ? lines_in_half_open(y0, y1, spacing) : lines_in_half_open(y1, y0, spacing);
}

std::int64_t count_intersections(const PivotNeedle& needle, const Lattice& lattice,
                                 const ThrowSample& t) {
    const auto v = vertex_heights(needle, t);
    const double d = lattice.spacing();
    return segment_crossings(v.pivot, v.end_a, d) + segment_crossings(v.pivot, v.end_b, d);
}

bool hull_hits_lattice(const PivotNeedle& needle, const Lattice& lattice, const ThrowSample& t) {
    const auto v = vertex_heights(needle, t);
    const auto [lo, hi] = std::minmax({v.pivot, v.end_a, v.end_b});
    return lines_in_half_open(lo, hi, lattice.spacing()) >= 1;
}

double min_vertex_line_distance(const PivotNeedle& needle, const Lattice& lattice,
                                const ThrowSample& t) {
    const auto v = vertex_heights(needle, t);
    const double d = lattice.spacing();
    double best = d;
    for (double h : {v.pivot, v.end_a, v.end_b}) {
        const double r = h - d * std::floor(h / d);
        best = std::min({best, r, d - r});
    }
    return best;
}

}  // namespace pivot_buffon
