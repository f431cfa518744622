#include "pdm1d/ordering.hpp"

#include <cmath>
#include <stdexcept>

namespace pdm {

double sigma(double mass_ratio, double beta) {
    if (!std::isfinite(mass_ratio) || mass_ratio <= 0.0)
        throw std::domain_error("sigma: mass ratio must be positive and finite");
    if (!std::isfinite(beta))
        throw std::domain_error("sigma: beta must be finite");
    // exp((beta + 1/2) log mu) keeps mu = 1 exact and stays stable for
    // extreme ratios; the exponent is exactly zero for beta = -1/2.
    return std::exp((beta + 0.5) * std::log(mass_ratio));
}

}  // namespace pdm
