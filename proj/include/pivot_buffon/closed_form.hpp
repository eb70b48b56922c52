#pragma once

/// \file closed_form.hpp
/// \brief Exact hit probabilities of a pivot needle on a line lattice.
///
/// With k^2 = 4ab / (a + b)^2 and mean chord cbar = 2(a + b) E(k) / pi:
///
///   P(A or B)  = (a + b + cbar) / (pi d)
///   P(A and B) = (a + b - cbar) / (pi d)
///   p0 = 1 - P(A or B),  p1 = 2 cbar / (pi d),  p2 = P(A and B)
///
/// where A, B are the events that arm a, arm b crosses a line. All formulas
/// require a + b <= d; larger needles raise ConstraintError instead of
/// returning an extrapolated value.

#include "pivot_buffon/elliptic.hpp"
#include "pivot_buffon/geometry.hpp"

namespace pivot_buffon {

/// Simplex tolerance applied before clamping probabilities into [0, 1].
inline constexpr double kSimplexTolerance = 1e-12;

Modulus modulus(const PivotNeedle& needle);

/// Mean of |A'B'| over a uniformly distributed opening angle.
double mean_chord(const PivotNeedle& needle);

/// Throws ConstraintError unless a + b <= d.
void require_short_needle(const PivotNeedle& needle, const Lattice& lattice);

/// Probability that at least one arm crosses a line.
double p_union(const PivotNeedle& needle, const Lattice& lattice);

/// Probability that both arms cross a line.
double p_both(const PivotNeedle& needle, const Lattice& lattice);

HitDistribution hit_distribution(const PivotNeedle& needle, const Lattice& lattice);

/// 2(a + b) / (pi d). The expression is valid for any needle but is only
/// exposed under a + b <= d, where it equals p1 + 2 p2.
double expected_intersections(const PivotNeedle& needle, const Lattice& lattice);

/// Hit probabilities when the opening angle is held fixed at `phi`.
HitDistribution fixed_angle_distribution(const PivotNeedle& needle, const Lattice& lattice,
                                         double phi);

}  // namespace pivot_buffon
