#pragma once

// Internal numerics shared by the scattering, barrier and band solvers.
// Everything here is expressed in q = k^2, where the trigonometric and
// hyperbolic branches are two faces of the same entire function, so
// thresholds (q = 0) need no special casing beyond a short series.

#include <cmath>

namespace pdm::detail {

struct CosSinc {
    double c;  // cos(k w)            (cosh for q < 0)
    double s;  // sin(k w)/k          (sinh(kappa w)/kappa for q < 0)
};

// Series window: with |q| w^2 < 1e-3 the 4-term series is accurate to
// ~1e-17 relative, well past double rounding.
inline CosSinc cos_sinc(double q, double w) {
    const double z = q * w * w;
    if (std::abs(z) < 1e-3) {
        const double c = 1.0 - z / 2.0 * (1.0 - z / 12.0 * (1.0 - z / 30.0));
        const double s = w * (1.0 - z / 6.0 * (1.0 - z / 20.0 * (1.0 - z / 42.0)));
        return {c, s};
    }
    if (z > 0.0) {
        const double kw = std::sqrt(z);
        return {std::cos(kw), std::sin(kw) * w / kw};
    }
    const double xw = std::sqrt(-z);
    return {std::cosh(xw), std::sinh(xw) * w / xw};
}

// sin^2(sqrt(z))/z, continued as sinh^2(sqrt(-z))/(-z) for z < 0.
inline double sin_sq_over(double z) {
    if (std::abs(z) < 1e-3)
        return 1.0 - z / 3.0 + 2.0 * z * z / 45.0 - z * z * z / 315.0;
    if (z > 0.0) {
        const double s = std::sin(std::sqrt(z));
        return s * s / z;
    }
    const double s = std::sinh(std::sqrt(-z));
    return s * s / (-z);
}

// Forward evolution of the continuous state (m^alpha psi, m^(alpha+beta) psi')
// across a flat region: u' = m^-beta v, v' = -q m^beta u. Unimodular.
struct Mat2 {
    double a00, a01, a10, a11;
};

inline Mat2 region_state_matrix(double q, double mass, double width, double beta) {
    const CosSinc cs = cos_sinc(q, width);
    const double mb = std::pow(mass, beta);
    return {cs.c, cs.s / mb, -q * cs.s * mb, cs.c};
}

// Barrier coupling factor g(E) = ((sigma^2 - 1)E + V0)^2 / (4 sigma^2 E (E - V0)).
inline double coupling_g(double sigma_sq, double energy, double V0) {
    const double num = (sigma_sq - 1.0) * energy + V0;
    return num * num / (4.0 * sigma_sq * energy * (energy - V0));
}

}  // namespace pdm::detail
