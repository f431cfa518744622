#include "pdm1d/wavenumber.hpp"

#include <cmath>
#include <stdexcept>

namespace pdm {

std::complex<double> wavenumber(double energy, double mass, double potential,
                                const PhysicalConstants& constants) {
    if (!std::isfinite(mass) || mass <= 0.0)
        throw std::domain_error("wavenumber: mass must be positive and finite");
    if (!std::isfinite(energy) || !std::isfinite(potential))
        throw std::domain_error("wavenumber: energy and potential must be finite");
    const double q = 2.0 * mass * (energy - potential) / (constants.hbar * constants.hbar);
    if (q >= 0.0) return {std::sqrt(q), 0.0};
    return {0.0, std::sqrt(-q)};
}

}  // namespace pdm
