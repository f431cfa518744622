#pragma once

#include "pdm1d/constants.hpp"
#include "pdm1d/ordering.hpp"
#include "pdm1d/step.hpp"

namespace pdm {

/// Rectangular region of mass m2 and potential V0 over width a, embedded in
/// a medium of mass m1 at zero potential. V0 > 0 is a barrier, V0 < 0 a
/// well seen from above.
struct BarrierParams {
    double m1;
    double m2;
    double V0;
    double a;
    OrderingScheme scheme;
    PhysicalConstants constants;
};

/// The step with the same media (barrier entry face).
StepParams step_params(const BarrierParams& p);

/// Exact transmission T = (1 + g sin^2(k2 a))^-1 for E > V0, continued with
/// sin(iz) = i sinh(z) below the barrier top. Implemented as a single
/// expression analytic in k2^2, so the two branches join smoothly at E = V0
/// (no 0*inf at the threshold). Requires E > 0.
double barrier_transmission(const BarrierParams& p, double energy);

/// Coupling factor multiplying sin^2(k2 a):
/// g = ((sigma^2 - 1)E + V0)^2 / (4 sigma^2 E (E - V0)), defined for E > V0.
double g_factor(const BarrierParams& p, double energy);

/// Exponential tunnelling asymptote for kappa2*a >> 1:
/// 16 sigma^2 E (V0 - E)/((sigma^2 - 1)E + V0)^2 * exp(-2 kappa2 a),
/// kappa2 = sqrt(2 m2 (V0 - E))/hbar. Requires 0 < E < V0.
double thick_barrier_transmission(const BarrierParams& p, double energy);

/// Energy in (0, V0) maximizing the prefactor of the tunnelling asymptote,
/// located numerically to 1e-10 relative. Equals V0/2 when sigma = 1.
double prefactor_max_energy(const BarrierParams& p);

}  // namespace pdm
