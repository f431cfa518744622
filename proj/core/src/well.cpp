#include "pdm1d/well.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace pdm {

namespace {

void check(const WellParams& p) {
    if (!std::isfinite(p.m1) || p.m1 <= 0.0 || !std::isfinite(p.m2) || p.m2 <= 0.0)
        throw std::invalid_argument("well: masses must be positive and finite");
    if (!std::isfinite(p.V0) || p.V0 <= 0.0)
        throw std::invalid_argument("well: depth V0 must be positive and finite");
    if (!std::isfinite(p.a) || p.a <= 0.0)
        throw std::invalid_argument("well: width must be positive and finite");
    if (!std::isfinite(p.constants.hbar) || p.constants.hbar <= 0.0)
        throw std::invalid_argument("well: hbar must be positive and finite");
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double abs_tol) {
    double f_lo = f(lo);
    for (int i = 0; i < 200 && hi - lo > abs_tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = f(mid);
        if (f_mid == 0.0) return mid;
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Sign-change sweep over interior sample points; one bisected root per change.
std::vector<double> scan_roots(const std::function<double(double)>& f, double upper,
                               std::size_t samples, double refine_tol) {
    std::vector<double> roots;
    double prev_x = upper * 1e-12;
    double prev_f = f(prev_x);
    for (std::size_t i = 1; i <= samples; ++i) {
        const double x = (i == samples) ? upper * (1.0 - 1e-12)
                                        : upper * static_cast<double>(i) / static_cast<double>(samples);
        const double fx = f(x);
        if (fx == 0.0)
            roots.push_back(x);
        else if ((fx < 0.0) != (prev_f < 0.0))
            roots.push_back(bisect(f, prev_x, x, refine_tol));
        prev_x = x;
        prev_f = fx;
    }
    return roots;
}

bool alternating_from_even(const Spectrum& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Parity expected = (i % 2 == 0) ? Parity::even : Parity::odd;
        if (s[i].parity != expected) return false;
    }
    return !s.empty();
}

}  // namespace

Spectrum well_spectrum(const WellParams& p) {
    check(p);
    const double hbar = p.constants.hbar;
    // Reduced variables: theta = p2 a/2 in (0, theta_max),
    // eta = sqrt(theta_max^2 - theta^2). The junction conditions collapse to
    //   even: theta sin(theta) - sigma eta cos(theta) = 0
    //   odd:  theta cos(theta) + sigma eta sin(theta) = 0
    // (pole-free forms), with the whole m1 and beta dependence in sigma.
    const double theta_max = 0.5 * p.a * std::sqrt(2.0 * p.m2 * p.V0) / hbar;
    const double s = sigma(p.m1 / p.m2, p.scheme.beta);
    const auto eta = [&](double theta) {
        const double d = theta_max * theta_max - theta * theta;
        return d > 0.0 ? std::sqrt(d) : 0.0;
    };
    const auto f_even = [&](double t) { return t * std::sin(t) - s * eta(t) * std::cos(t); };
    const auto f_odd = [&](double t) { return t * std::cos(t) + s * eta(t) * std::sin(t); };

    const std::size_t levels_est =
        1 + static_cast<std::size_t>(std::floor(2.0 * theta_max / M_PI));
    const double e_of_theta_coeff = 2.0 * hbar * hbar / (p.m2 * p.a * p.a);

    std::size_t samples = std::max<std::size_t>(64, 16 * (levels_est + 1));
    Spectrum spectrum;
    for (int attempt = 0; attempt < 5; ++attempt) {
        spectrum.clear();
        const double tol = theta_max * 1e-15;
        for (double t : scan_roots(f_even, theta_max, samples, tol))
            spectrum.push_back({e_of_theta_coeff * t * t - p.V0, Parity::even});
        for (double t : scan_roots(f_odd, theta_max, samples, tol))
            spectrum.push_back({e_of_theta_coeff * t * t - p.V0, Parity::odd});
        std::sort(spectrum.begin(), spectrum.end(),
                  [](const BoundState& x, const BoundState& y) { return x.energy < y.energy; });
        if (alternating_from_even(spectrum)) return spectrum;
        samples *= 2;  // suspected missed root: refine the bracketing grid
    }
    if (spectrum.empty())
        throw std::runtime_error("well_spectrum: no bound state found; a symmetric well must bind");
    throw std::runtime_error("well_spectrum: parity sequence did not stabilize");
}

Spectrum constant_mass_well_spectrum(double mass, double V0, double a,
                                     const PhysicalConstants& constants) {
    if (!std::isfinite(mass) || mass <= 0.0 || !std::isfinite(V0) || V0 <= 0.0 ||
        !std::isfinite(a) || a <= 0.0)
        throw std::invalid_argument("constant_mass_well_spectrum: mass, V0, a must be positive");
    const double hbar = constants.hbar;
    const double p_max = std::sqrt(2.0 * mass * V0) / hbar;
    const auto energy_of = [&](double pm) { return pm * pm * hbar * hbar / (2.0 * mass) - V0; };
    const auto kappa_of = [&](double pm) {
        const double e = energy_of(pm);
        return e < 0.0 ? std::sqrt(-2.0 * mass * e) / hbar : 0.0;
    };
    // Dimensional residuals in momentum space (an independent route from the
    // reduced-variable solver above).
    const auto f_even = [&](double pm) {
        return pm * std::sin(0.5 * pm * a) - kappa_of(pm) * std::cos(0.5 * pm * a);
    };
    const auto f_odd = [&](double pm) {
        return pm * std::cos(0.5 * pm * a) + kappa_of(pm) * std::sin(0.5 * pm * a);
    };

    const std::size_t levels_est =
        1 + static_cast<std::size_t>(std::floor(p_max * a / M_PI));
    const std::size_t samples = std::max<std::size_t>(256, 64 * (levels_est + 1));
    const double tol = p_max * 1e-15;

    Spectrum spectrum;
    for (double pm : scan_roots(f_even, p_max, samples, tol))
        spectrum.push_back({energy_of(pm), Parity::even});
    for (double pm : scan_roots(f_odd, p_max, samples, tol))
        spectrum.push_back({energy_of(pm), Parity::odd});
    std::sort(spectrum.begin(), spectrum.end(),
              [](const BoundState& x, const BoundState& y) { return x.energy < y.energy; });
    return spectrum;
}

double well_matching_residual(const WellParams& p, double energy, Parity parity) {
    check(p);
    if (!(energy > -p.V0) || !(energy < 0.0))
        throw std::domain_error("well_matching_residual: energy must lie in (-V0, 0)");
    const double hbar = p.constants.hbar;
    const double theta = 0.5 * p.a * std::sqrt(2.0 * p.m2 * (energy + p.V0)) / hbar;
    const double eta = 0.5 * p.a * std::sqrt(-2.0 * p.m2 * energy) / hbar;
    const double s = sigma(p.m1 / p.m2, p.scheme.beta);
    const double scale = theta + s * eta;
    if (parity == Parity::even)
        return (theta * std::sin(theta) - s * eta * std::cos(theta)) / scale;
    return (theta * std::cos(theta) + s * eta * std::sin(theta)) / scale;
}

double well_cosine_condition_residual(const WellParams& p, double energy) {
    check(p);
    if (!(energy > -p.V0) || !(energy < 0.0))
        throw std::domain_error("well_cosine_condition_residual: energy must lie in (-V0, 0)");
    const double hbar = p.constants.hbar;
    const double p2_sq = 2.0 * p.m2 * (energy + p.V0) / (hbar * hbar);
    const double p2 = std::sqrt(p2_sq);
    const double s = sigma(p.m1 / p.m2, p.scheme.beta);
    const double s2 = s * s;  // (m1/m2)^(2 beta + 1)
    const double depth_term = 2.0 * p.m2 * p.V0 / (hbar * hbar);
    const double rhs = p2_sq / (p2_sq * (1.0 - s2) + depth_term * s2);
    return std::cos(0.5 * p2 * p.a) - rhs;
}

}  // namespace pdm
