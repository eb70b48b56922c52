#pragma once

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fmt/format.h>

#include "pivot_buffon/errors.hpp"

namespace pivot_buffon::quadrature {

inline constexpr unsigned kMaxDepth = 24;

/// Adaptive 15-point Gauss-Kronrod integration of `f` over [lo, hi].
///
/// Accepts when the Kronrod error estimate is at most tol * max(1, L1),
/// i.e. an absolute tolerance for integrals of order one. Throws
/// ConvergenceError when subdivision bottoms out before that.
template <class F>
double integrate(F&& f, double lo, double hi, double tol) {
    if (!(tol > 0.0)) {
        throw DomainError(fmt::format("quadrature tolerance must be positive, got {}", tol));
    }
    double error = 0.0;
    double l1 = 0.0;
    double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, lo, hi, kMaxDepth, tol, &error, &l1);
    if (!std::isfinite(value) || error > tol * std::max(1.0, l1)) {
        throw ConvergenceError(fmt::format(
            "adaptive quadrature on [{}, {}] stopped at error estimate {:.3e} (tolerance {:.3e})",
            lo, hi, error, tol));
    }
    return value;
}

/// Mean of `f` over one full turn, (1 / 2pi) * integral over [0, 2pi].
template <class F>
double mean_over_turn(F&& f, double tol) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    return integrate(std::forward<F>(f), 0.0, two_pi, tol * two_pi) / two_pi;
}

}  // namespace pivot_buffon::quadrature
