#include "pdm1d/step.hpp"

#include <cmath>
#include <stdexcept>

namespace pdm {

namespace {

void check(const StepParams& p) {
    if (!std::isfinite(p.m1) || p.m1 <= 0.0 || !std::isfinite(p.m2) || p.m2 <= 0.0)
        throw std::invalid_argument("step: masses must be positive and finite");
    if (!std::isfinite(p.V0))
        throw std::invalid_argument("step: V0 must be finite");
    if (!std::isfinite(p.constants.hbar) || p.constants.hbar <= 0.0)
        throw std::invalid_argument("step: hbar must be positive and finite");
}

double check_energy(const StepParams& p, double energy) {
    check(p);
    if (!std::isfinite(energy) || energy <= 0.0)
        throw std::domain_error("step: energy must be positive");
    return sigma(p.m1 / p.m2, p.scheme.beta);
}

}  // namespace

double step_transmission(const StepParams& p, double energy) {
    const double s = check_energy(p, energy);
    if (energy <= p.V0) return 0.0;
    const double root_e = std::sqrt(energy);
    const double root_d = std::sqrt(energy - p.V0);
    const double den = s * root_e + root_d;
    return 4.0 * s * root_e * root_d / (den * den);
}

double step_reflection(const StepParams& p, double energy) {
    const double s = check_energy(p, energy);
    if (energy <= p.V0) return 1.0;
    const double root_e = std::sqrt(energy);
    const double root_d = std::sqrt(energy - p.V0);
    const double ratio = (s * root_e - root_d) / (s * root_e + root_d);
    return ratio * ratio;
}

double step_asymptote(const StepParams& p) {
    check(p);
    const double s = sigma(p.m1 / p.m2, p.scheme.beta);
    return 4.0 * s / ((s + 1.0) * (s + 1.0));
}

std::optional<double> transparency_energy(const StepParams& p) {
    check(p);
    if (p.V0 <= 0.0)
        throw std::domain_error("transparency_energy: defined for an up-step (V0 > 0)");
    const double s = sigma(p.m1 / p.m2, p.scheme.beta);
    const double s2 = s * s;
    if (s2 >= 1.0) return std::nullopt;  // includes beta = -1/2 (sigma = 1)
    return p.V0 / (1.0 - s2);
}

}  // namespace pdm
