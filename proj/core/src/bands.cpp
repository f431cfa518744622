#include "pdm1d/bands.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "flat_region.hpp"
#include "pdm1d/ordering.hpp"

namespace pdm {

namespace {

void check(const LatticeParams& p) {
    if (!std::isfinite(p.m1) || p.m1 <= 0.0 || !std::isfinite(p.m2) || p.m2 <= 0.0)
        throw std::invalid_argument("lattice: masses must be positive and finite");
    if (!std::isfinite(p.V0) || p.V0 < 0.0)
        throw std::invalid_argument("lattice: barrier height must be non-negative and finite");
    if (!std::isfinite(p.a) || p.a <= 0.0 || !std::isfinite(p.b) || p.b <= 0.0)
        throw std::invalid_argument("lattice: widths must be positive and finite");
    if (!std::isfinite(p.constants.hbar) || p.constants.hbar <= 0.0)
        throw std::invalid_argument("lattice: hbar must be positive and finite");
}

}  // namespace

double dispersion_rhs(const LatticeParams& p, double energy) {
    check(p);
    if (!std::isfinite(energy) || energy <= 0.0)
        throw std::domain_error("dispersion_rhs: energy must be positive");
    const double h2 = p.constants.hbar * p.constants.hbar;
    const double q1 = 2.0 * p.m1 * energy / h2;
    const double q2 = 2.0 * p.m2 * (energy - p.V0) / h2;
    const detail::Mat2 well = detail::region_state_matrix(q1, p.m1, p.b, p.scheme.beta);

    // Half the trace of the period's state-evolution matrix: equal to
    // cos(k1 b) cos(k2 a) - h sin(k1 b) sin(k2 a) above the barrier top and
    // to its hyperbolic continuation below it.
    const double z2 = q2 * p.a * p.a;
    if (z2 < -122500.0) {  // kappa2*a > 350: factor out exp(kappa2 a)
        const double kappa = std::sqrt(-q2);
        const double u = std::exp(-kappa * p.a);
        const double mb = std::pow(p.m2, p.scheme.beta);
        const double cs = 0.5 * (1.0 + u * u);
        const double ss = (1.0 - u * u) / (2.0 * kappa);
        const double t00 = cs * well.a00 + (ss / mb) * well.a10;
        const double t11 = (-q2 * ss * mb) * well.a01 + cs * well.a11;
        return 0.5 * (t00 + t11) / u;
    }
    const detail::Mat2 bar = detail::region_state_matrix(q2, p.m2, p.a, p.scheme.beta);
    const double t00 = bar.a00 * well.a00 + bar.a01 * well.a10;
    const double t11 = bar.a10 * well.a01 + bar.a11 * well.a11;
    return 0.5 * (t00 + t11);
}

double h_factor(const LatticeParams& p, double energy) {
    check(p);
    if (!std::isfinite(energy) || energy <= 0.0)
        throw std::domain_error("h_factor: energy must be positive");
    if (energy <= p.V0)
        throw std::domain_error("h_factor: defined above the barrier top (E > V0)");
    const double s = sigma(p.m1 / p.m2, p.scheme.beta);
    return std::sqrt(1.0 + detail::coupling_g(s * s, energy, p.V0));
}

BandDiagram band_diagram(const LatticeParams& p, double e_min, double e_max,
                         std::size_t grid) {
    check(p);
    if (!std::isfinite(e_min) || !std::isfinite(e_max) || e_min <= 0.0 || e_min >= e_max)
        throw std::invalid_argument("band_diagram: require 0 < e_min < e_max");
    if (grid < 2)
        throw std::invalid_argument("band_diagram: grid must have at least 2 points");

    std::vector<double> es(grid), rs(grid);
    for (std::size_t i = 0; i < grid; ++i) {
        es[i] = e_min + (e_max - e_min) * static_cast<double>(i) / static_cast<double>(grid - 1);
        rs[i] = dispersion_rhs(p, es[i]);
    }
    const auto inside = [](double r) { return std::abs(r) <= 1.0; };

    for (std::size_t i = 0; i + 1 < grid; ++i) {
        if (!inside(rs[i]) && !inside(rs[i + 1]) && (rs[i] < 0.0) != (rs[i + 1] < 0.0))
            throw resolution_error(
                "band_diagram: an entire band fits between grid points near E = " +
                std::to_string(es[i]) + "; rerun with a finer grid");
    }

    const auto refine_edge = [&](double lo, double hi) {
        // |RHS| - 1 changes sign across a band edge.
        double f_lo = std::abs(dispersion_rhs(p, lo)) - 1.0;
        for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double f_mid = std::abs(dispersion_rhs(p, mid)) - 1.0;
            if ((f_mid < 0.0) == (f_lo < 0.0)) {
                lo = mid;
                f_lo = f_mid;
            } else {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    };

    BandDiagram diagram;
    bool in_band = inside(rs[0]);
    double band_start = e_min;
    for (std::size_t i = 0; i + 1 < grid; ++i) {
        if (inside(rs[i + 1]) == in_band) continue;
        const double edge = refine_edge(es[i], es[i + 1]);
        if (in_band)
            diagram.allowed.push_back({band_start, edge});
        else
            band_start = edge;
        in_band = !in_band;
    }
    if (in_band) diagram.allowed.push_back({band_start, e_max});

    for (std::size_t i = 0; i + 1 < diagram.allowed.size(); ++i)
        diagram.gap_widths.push_back(diagram.allowed[i + 1].lower - diagram.allowed[i].upper);
    return diagram;
}

std::optional<double> quasimomentum(const LatticeParams& p, double energy) {
    const double r = dispersion_rhs(p, energy);
    if (std::abs(r) > 1.0) return std::nullopt;
    return std::acos(r) / p.period();
}

}  // namespace pdm
