#pragma once

#include <complex>
#include <vector>

#include "pdm1d/constants.hpp"
#include "pdm1d/errors.hpp"
#include "pdm1d/ordering.hpp"
#include "pdm1d/structure.hpp"

namespace pdm {

/// Plane-wave amplitude pair of one region, anchored at the region's left
/// edge (the left lead is anchored at the first interface).
struct RegionAmplitudes {
    std::complex<double> forward;
    std::complex<double> backward;
};

/// Scattering state at fixed energy for a unit wave incident from the left.
/// transmission and reflection are flux ratios: the conserved current is
/// j ~ Im[(m^alpha psi)* (m^(alpha+beta) psi')] = Im[psi* psi']/m, so
/// T = (k_R/m_R)/(k_L/m_L) |t|^2 with t the right-lead forward amplitude.
struct ScatteringSolution {
    double energy;
    std::vector<RegionAmplitudes> amplitudes;  // left lead, layers..., right lead
    double transmission;
    double reflection;
};

/// Cascades junction and propagation factors left to right in scattering
/// (Redheffer) form, so evanescent segments only ever contribute decaying
/// exponentials and kappa*width up to the double exponent range degrades
/// gracefully instead of overflowing. Layers whose |k|*width falls below
/// 1e-6 are fused with their bounding junctions into a single block built
/// from series-expanded flat-region state matrices, which keeps T exact and
/// continuous through every interior k = 0 threshold.
///
/// Requires energy > left-lead potential (open incoming channel), else
/// throws no_open_channel_error. A closed right lead gives T = 0, R = 1.
ScatteringSolution scatter(const Structure& structure, double energy,
                           OrderingScheme scheme,
                           const PhysicalConstants& constants = {});

}  // namespace pdm
