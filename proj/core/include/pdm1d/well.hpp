#pragma once

#include <vector>

#include "pdm1d/constants.hpp"
#include "pdm1d/ordering.hpp"

namespace pdm {

/// Rectangular well centred at the origin: potential -V0 and mass m2 inside
/// (|x| < a/2), potential 0 and mass m1 outside. Centring makes parity
/// classification exact.
struct WellParams {
    double m1;
    double m2;
    double V0;  // depth, > 0
    double a;   // width, > 0
    OrderingScheme scheme;
    PhysicalConstants constants;
};

enum class Parity { even, odd };

struct BoundState {
    double energy;  // in (-V0, 0)
    Parity parity;
};

using Spectrum = std::vector<BoundState>;

/// All bound states from the junction conditions, which reduce to
///   even:  tan(p2 a/2) = (m1/m2)^beta kappa1/p2
///   odd:  -cot(p2 a/2) = (m1/m2)^beta kappa1/p2
/// with p2 = sqrt(2 m2 (E + V0))/hbar and kappa1 = sqrt(-2 m1 E)/hbar.
/// Both reduce to the constant-mass-m2 well for beta = -1/2, for any m1.
/// Roots are bracketed on a per-level grid (doubled if the parity sequence
/// looks wrong) and bisected to machine-level precision; the result is
/// sorted ascending with alternating parities starting even. A symmetric
/// well always binds at least one even state; std::runtime_error otherwise.
Spectrum well_spectrum(const WellParams& p);

/// Textbook constant-mass finite-well spectrum, solved independently in
/// momentum space (uniform bracketing grid + bisection on the dimensional
/// residuals); the oracle for the beta = -1/2 equivalence.
Spectrum constant_mass_well_spectrum(double mass, double V0, double a,
                                     const PhysicalConstants& constants = {});

/// Signed, pole-free residual of the junction condition of the given parity
/// at energy E in (-V0, 0); zero exactly at bound states, normalized to O(1).
double well_matching_residual(const WellParams& p, double energy, Parity parity);

/// LHS - RHS of the closed cosine-form eigenvalue condition
///   cos(p2 a/2) = p2^2 / (p2^2 (1 - sigma^2) + (2 m2 V0/hbar^2) sigma^2)
/// kept purely as a diagnostic: its roots do not reproduce the
/// first-principles spectrum (the audit subcommand reports where they fall).
/// The bracket's mass term is read as 2 m2 V0/hbar^2 so both sides carry
/// 1/length^2.
double well_cosine_condition_residual(const WellParams& p, double energy);

}  // namespace pdm
