#include "pivot_buffon/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "pivot_buffon/errors.hpp"
#include "pivot_buffon/quadrature.hpp"

namespace pivot_buffon {

namespace {

constexpr double kSnapTolerance = 1e-12;
constexpr int kMaxAgmIterations = 64;
constexpr double kAgmRelativeStop = 1e-16;

}  // namespace

Modulus Modulus::from_k_squared(double k_squared) {
    if (!std::isfinite(k_squared) || k_squared < -kSnapTolerance ||
        k_squared > 1.0 + kSnapTolerance) {
        throw DomainError(fmt::format("elliptic modulus k^2 = {} is outside [0, 1]", k_squared));
    }
    k_squared = std::clamp(k_squared, 0.0, 1.0);
    return Modulus(std::sqrt(k_squared), k_squared);
}

Modulus Modulus::from_k(double k) {
    if (!std::isfinite(k) || k < -kSnapTolerance || k > 1.0 + kSnapTolerance) {
        throw DomainError(fmt::format("elliptic modulus k = {} is outside [0, 1]", k));
    }
    k = std::clamp(k, 0.0, 1.0);
    return Modulus(k, k * k);
}

double complete_e(Modulus m) {
    const double k2 = m.k_squared();
    if (k2 == 0.0) {
        return std::numbers::pi / 2.0;
    }
    if (k2 == 1.0) {
        return 1.0;
    }

    // Gauss' AGM: a0 = 1, g0 = k', c0 = k, and
    //   E = K * (1 - sum_n 2^(n-1) c_n^2),  K = pi / (2 a_inf).
    // c_{n+1} = c_n^2 / (4 a_{n+1}) avoids the cancellation in (a_n - g_n) / 2.
    double a = 1.0;
    double g = std::sqrt(1.0 - k2);
    double c = m.k();
    double weight = 0.5;
    double sum = weight * k2;
    int iterations = 0;
    while (c > kAgmRelativeStop * a) {
        if (++iterations > kMaxAgmIterations) {
            throw ConvergenceError(
                fmt::format("AGM for E(k) did not converge for k^2 = {}", k2));
        }
        const double a_next = 0.5 * (a + g);
        c = c * c / (4.0 * a_next);
        g = std::sqrt(a * g);
        a = a_next;
        weight *= 2.0;
        sum += weight * c * c;
    }
    return std::numbers::pi / (2.0 * a) * (1.0 - sum);
}

double complete_e_quadrature(Modulus m, double tol) {
    if (!(tol > 0.0) || tol > 1e-6) {
        throw DomainError(fmt::format("quadrature tolerance {} is outside (0, 1e-6]", tol));
    }
    const double k2 = m.k_squared();
    auto integrand = [k2](double theta) {
        const double s = std::sin(theta);
        return std::sqrt(std::max(0.0, 1.0 - k2 * s * s));
    };
    return quadrature::integrate(integrand, 0.0, std::numbers::pi / 2.0, tol);
}

}  // namespace pivot_buffon
