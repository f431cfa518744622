#pragma once

#include <optional>

#include "pdm1d/constants.hpp"
#include "pdm1d/ordering.hpp"

namespace pdm {

/// Abrupt junction at x = 0: mass m1 and zero potential on the left, mass m2
/// and potential V0 on the right.
struct StepParams {
    double m1;
    double m2;
    double V0;
    OrderingScheme scheme;
    PhysicalConstants constants;
};

/// T(E) = 4 sigma sqrt(E(E - V0)) / (sigma sqrt(E) + sqrt(E - V0))^2 above
/// the step, 0 at or below it (total reflection). Requires E > 0.
double step_transmission(const StepParams& p, double energy);

/// R(E) = 1 - T(E); equals 1 for E <= V0. Requires E > 0.
double step_reflection(const StepParams& p, double energy);

/// High-energy limit of the step transmission, 4 sigma/(sigma + 1)^2.
/// Equals 1 exactly when sigma = 1 (beta = -1/2 or equal masses).
double step_asymptote(const StepParams& p);

/// The energy above V0 where the step reflects nothing: V0/(1 - sigma^2)
/// when sigma^2 < 1, absent otherwise (always absent for beta = -1/2).
/// Requires V0 > 0 (an up-step).
std::optional<double> transparency_energy(const StepParams& p);

}  // namespace pdm
