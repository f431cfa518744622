#pragma once

namespace pdm {

/// Ordering of mass and momentum factors in the kinetic operator
/// (m^alpha p m^beta p m^alpha)/2. Only beta is free: hermiticity plus the
/// dimensional constraint 2*alpha + beta = -1 fix the outer exponents, so
/// alpha is derived and the two outer exponents are always equal.
struct OrderingScheme {
    double beta = -0.5;

    constexpr double alpha() const noexcept { return -0.5 * (1.0 + beta); }
};

/// Mass-mismatch factor sigma = mass_ratio^(beta + 1/2) controlling every
/// interface anomaly. Identically 1 for beta = -1/2 or equal masses.
/// Throws std::domain_error for mass_ratio <= 0.
double sigma(double mass_ratio, double beta);

}  // namespace pdm
