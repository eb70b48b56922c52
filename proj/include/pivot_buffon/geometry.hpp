#pragma once

/// \file geometry.hpp
/// \brief Pivot needle, line lattice, single throws and crossing counts.
///
/// The lattice consists of the horizontal lines y = m * d, m integer. A throw
/// places the pivot C' at height y and points the two arms C'A' (length a)
/// and C'B' (length b) at angles alpha and beta against the lines. The
/// x-coordinate of C' never affects a crossing count and is not modelled.
///
/// Boundary convention: a line at level L crosses a segment whose endpoint
/// heights span [lo, hi] iff lo < L <= hi. Vertices lying exactly on a line
/// have probability zero; the convention only keeps counts deterministic.

#include <cstdint>
#include <string_view>

namespace pivot_buffon {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Reduces an arbitrary angle into [0, 2pi).
double reduce_angle(double phi);

/// Two segments of lengths a and b joined at a pivot.
class PivotNeedle {
public:
    /// Throws DomainError for negative or non-finite lengths and
    /// DegenerateNeedleError when a + b == 0.
    PivotNeedle(double a, double b);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double total_length() const noexcept { return a_ + b_; }

    friend bool operator==(const PivotNeedle&, const PivotNeedle&) = default;

private:
    double a_;
    double b_;
};

/// Parallel lines y = m * d.
class Lattice {
public:
    explicit Lattice(double spacing);

    double spacing() const noexcept { return d_; }

    friend bool operator==(const Lattice&, const Lattice&) = default;

private:
    double d_;
};

/// One random throw: pivot height and both arm directions.
struct ThrowSample {
    double y = 0.0;
    double alpha = 0.0;
    double beta = 0.0;

    /// Builds a throw with y reduced into [0, d) and angles into [0, 2pi).
    static ThrowSample reduced(const Lattice& lattice, double y, double alpha, double beta);

    /// Opening angle between the arms, beta - alpha reduced into [0, 2pi).
    double opening_angle() const { return reduce_angle(beta - alpha); }
};

/// Heights of the three hull vertices for a throw.
struct VertexHeights {
    double pivot;
    double end_a;
    double end_b;
};

VertexHeights vertex_heights(const PivotNeedle& needle, const ThrowSample& t);

enum class DistributionSource : std::uint8_t { exact, fixed_angle_exact, monte_carlo };

std::string_view to_string(DistributionSource source);

/// Probabilities of exactly 0, 1 and 2 crossing points.
struct HitDistribution {
    double p0 = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;
    DistributionSource source = DistributionSource::exact;

    double operator[](int i) const { return i == 0 ? p0 : (i == 1 ? p1 : p2); }
};

/// |A'B'| = sqrt(a^2 + b^2 - 2ab cos phi), in [|a - b|, a + b].
double chord_length(const PivotNeedle& needle, double phi);

/// Perimeter of the triangle A'C'B', a + b + chord_length.
double hull_perimeter(const PivotNeedle& needle, double phi);

/// Number of lattice lines strictly above `lo` and at or below `hi`.
std::int64_t lines_in_half_open(double lo, double hi, double spacing);

/// Crossings of one segment with vertical extent between y0 and y1.
std::int64_t segment_crossings(double y0, double y1, double spacing);

/// Total intersection points of both arms with the lattice.
std::int64_t count_intersections(const PivotNeedle& needle, const Lattice& lattice,
                                 const ThrowSample& t);

/// Whether some line meets the closed triangle A'C'B' (same boundary convention).
bool hull_hits_lattice(const PivotNeedle& needle, const Lattice& lattice, const ThrowSample& t);

/// Smallest distance from any hull vertex to a lattice line.
double min_vertex_line_distance(const PivotNeedle& needle, const Lattice& lattice,
                                const ThrowSample& t);

}  // namespace pivot_buffon
