#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pdm1d/constants.hpp"
#include "pdm1d/errors.hpp"
#include "pdm1d/ordering.hpp"

namespace pdm {

/// Periodic alternation of barriers (mass m2, height V0 > 0, width a) and
/// wells (mass m1, zero potential, width b); period d = a + b.
struct LatticeParams {
    double m1;
    double m2;
    double V0;
    double a;
    double b;
    OrderingScheme scheme;
    PhysicalConstants constants;

    double period() const noexcept { return a + b; }
};

struct EnergyInterval {
    double lower;
    double upper;

    double width() const noexcept { return upper - lower; }
};

/// Allowed bands over a scanned window and the gap widths between
/// consecutive bands.
struct BandDiagram {
    std::vector<EnergyInterval> allowed;
    std::vector<double> gap_widths;  // allowed.size() - 1 entries (or none)
};

/// Right-hand side of the Bloch condition cos(p d) = RHS(E):
/// cos(k1 b) cos(k2 a) - h(E) sin(k1 b) sin(k2 a) above the barrier top,
/// continued with cosh/sinh below it. Real for all E > 0; scaled evaluation
/// keeps the sign correct even when cosh(kappa2 a) would overflow.
/// Requires E > 0.
double dispersion_rhs(const LatticeParams& p, double energy);

/// Band-coupling factor h = sqrt(1 + g) >= 1, with g the barrier coupling
/// factor; equals 1 exactly when g = 0. Defined above the barrier top only
/// (throws std::domain_error for E <= V0); dispersion_rhs performs the
/// sub-barrier continuation internally.
double h_factor(const LatticeParams& p, double energy);

/// Scans [e_min, e_max] on `grid` points, locates every |RHS| = 1 crossing,
/// bisects each band edge to 1e-10 relative energy and assembles bands and
/// gaps. Throws resolution_error when two adjacent grid points lie in gaps
/// of opposite RHS sign, which proves an entire band was skipped.
BandDiagram band_diagram(const LatticeParams& p, double e_min, double e_max,
                         std::size_t grid);

/// Bloch wavevector arccos(RHS)/d in [0, pi/d] inside an allowed band,
/// absent inside gaps. Requires E > 0.
std::optional<double> quasimomentum(const LatticeParams& p, double energy);

}  // namespace pdm
