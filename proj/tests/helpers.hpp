#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "pdm1d/pdm1d.hpp"

namespace testutil {

inline double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

inline pdm::Structure step_structure(const pdm::StepParams& p) {
    return {{p.m1, 0.0}, {}, {p.m2, p.V0}};
}

inline pdm::Structure barrier_structure(const pdm::BarrierParams& p) {
    return {{p.m1, 0.0}, {{p.a, p.m2, p.V0}}, {p.m1, 0.0}};
}

inline pdm::Structure mirrored(const pdm::Structure& s) {
    pdm::Structure m;
    m.left_lead = s.right_lead;
    m.right_lead = s.left_lead;
    m.layers.assign(s.layers.rbegin(), s.layers.rend());
    return m;
}

/// N lattice periods as a finite structure embedded in the well medium.
inline pdm::Structure lattice_structure(const pdm::LatticeParams& p, int periods) {
    pdm::Structure s;
    s.left_lead = {p.m1, 0.0};
    s.right_lead = {p.m1, 0.0};
    for (int i = 0; i < periods; ++i) {
        s.layers.push_back({p.a, p.m2, p.V0});
        if (i + 1 < periods) s.layers.push_back({p.b, p.m1, 0.0});
    }
    return s;
}

/// Deterministic generator of random scattering scenarios.
struct ScenarioGen {
    std::mt19937 rng;

    explicit ScenarioGen(unsigned seed) : rng(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    }
    int uniform_int(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    pdm::Structure structure(int max_layers = 6) {
        pdm::Structure s;
        s.left_lead = {uniform(0.2, 5.0), uniform(-2.0, 2.0)};
        s.right_lead = {uniform(0.2, 5.0), uniform(-2.0, 2.0)};
        const int n = uniform_int(0, max_layers);
        for (int i = 0; i < n; ++i)
            s.layers.push_back({uniform(0.05, 2.5), uniform(0.2, 5.0), uniform(-3.0, 6.0)});
        return s;
    }

    double energy_above_leads(const pdm::Structure& s) {
        return std::max(s.left_lead.potential, s.right_lead.potential) + uniform(0.05, 8.0);
    }
};

/// Conserved current Im[(m^alpha psi)* (m^(alpha+beta) psi')] of one region
/// evaluated at local coordinate x (basis anchored at the region's left edge).
inline double state_flux(const pdm::RegionAmplitudes& amp, double mass,
                         std::complex<double> k, double x, pdm::OrderingScheme scheme) {
    const std::complex<double> I{0.0, 1.0};
    const std::complex<double> plus = std::exp(I * k * x);
    const std::complex<double> psi = amp.forward * plus + amp.backward / plus;
    const std::complex<double> dpsi = I * k * (amp.forward * plus - amp.backward / plus);
    const double ma = std::pow(mass, scheme.alpha());
    const double mab = std::pow(mass, scheme.alpha() + scheme.beta);
    return std::imag(std::conj(ma * psi) * (mab * dpsi));
}

}  // namespace testutil
