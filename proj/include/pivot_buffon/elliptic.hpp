#pragma once

/// \file elliptic.hpp
/// \brief Complete elliptic integral of the second kind, E(k).
///
/// E(k) = integral over [0, pi/2] of sqrt(1 - k^2 sin^2 theta).
/// The fast path is the arithmetic-geometric mean; complete_e_quadrature
/// evaluates the defining integral directly and serves as an oracle.

namespace pivot_buffon {

/// Elliptic modulus k in [0, 1]. Canonically built from k^2, which is the
/// quantity the hit-probability formulas produce without a square root.
class Modulus {
public:
    /// Values within 1e-12 outside [0, 1] are snapped onto the interval;
    /// anything further out raises DomainError.
    static Modulus from_k_squared(double k_squared);
    static Modulus from_k(double k);

    double k() const noexcept { return k_; }
    double k_squared() const noexcept { return k_squared_; }

private:
    Modulus(double k, double k_squared) noexcept : k_(k), k_squared_(k_squared) {}

    double k_;
    double k_squared_;
};

/// E(k) via the AGM, absolute error below 1e-13 on [0, 1].
/// Returns exactly pi/2 for k = 0 and exactly 1 for k = 1.
double complete_e(Modulus m);

/// E(k) by adaptive Gauss-Kronrod quadrature of the defining integral.
/// `tol` must lie in (0, 1e-6]. Throws ConvergenceError if the requested
/// tolerance cannot be reached.
double complete_e_quadrature(Modulus m, double tol);

}  // namespace pivot_buffon
