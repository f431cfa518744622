#pragma once

#include <complex>

#include "pdm1d/constants.hpp"

namespace pdm {

/// Local wavenumber k = sqrt(2 m (E - V))/hbar of a flat region, on the
/// branch with Im(k) >= 0 and Re(k) >= 0 when k is real. E > V gives a
/// purely real k; E < V gives k = i*kappa so that exp(ikx) decays toward
/// +infinity. Throws std::domain_error for mass <= 0.
std::complex<double> wavenumber(double energy, double mass, double potential,
                                const PhysicalConstants& constants = {});

}  // namespace pdm
