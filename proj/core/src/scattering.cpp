#include "pdm1d/scattering.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "flat_region.hpp"

namespace pdm {

namespace {

using cx = std::complex<double>;
constexpr cx I{0.0, 1.0};

// Threshold below which a layer's plane-wave basis is too degenerate for
// separate interface/propagation factors; such layers are fused.
constexpr double kThresholdPhase = 1e-6;

// Two-port scattering matrix: (b_left, a_right) = [[r, tp],[t, rp]] (a_left, b_right).
struct SMat {
    cx r{0.0}, t{1.0}, rp{0.0}, tp{1.0};
};

SMat star(const SMat& a, const SMat& b) {
    const cx d = 1.0 - a.rp * b.r;
    SMat s;
    s.t = b.t * a.t / d;
    s.r = a.r + a.tp * b.r * a.t / d;
    s.tp = a.tp * b.tp / d;
    s.rp = b.rp + b.t * a.rp * b.tp / d;
    return s;
}

// Junction between media (mL, kL) and (mR, kR), both bases local at the
// junction point. p and q are the two continuity mismatch factors.
SMat interface_smatrix(double mL, cx kL, double mR, cx kR, OrderingScheme scheme) {
    const double ratio = mR / mL;
    const double p = std::pow(ratio, scheme.alpha());
    const cx q = std::pow(ratio, scheme.alpha() + scheme.beta) * (kR / kL);
    const cx den = p + q;
    return {(p - q) / den, 2.0 / den, (q - p) / den, 2.0 * p * q / den};
}

// Phase advance across a uniform region; |exp(ikw)| <= 1 on the Im(k) >= 0
// branch, so this never grows.
SMat propagation_smatrix(cx k, double width) {
    const cx ph = std::exp(I * k * width);
    return {0.0, ph, 0.0, ph};
}

struct CMat2 {
    cx a00, a01, a10, a11;
};

// A basis at k = 0 exactly has no plane-wave decomposition; nudging onto the
// evanescent branch keeps the conversion finite, and every flux-carrying
// result has a clean limit there (T = 0 through a threshold lead).
cx regularized(cx k) { return k == cx{} ? cx{0.0, 1e-150} : k; }

// (u, v) = W (a, b) for local plane-wave amplitudes of medium (m, k).
CMat2 basis_to_state(double m, cx k, OrderingScheme scheme) {
    const double ma = std::pow(m, scheme.alpha());
    const double mab = std::pow(m, scheme.alpha() + scheme.beta);
    const cx ks = regularized(k);
    return {ma, ma, I * ks * mab, -I * ks * mab};
}

CMat2 state_to_basis(double m, cx k, OrderingScheme scheme) {
    const double ma = std::pow(m, scheme.alpha());
    const double mab = std::pow(m, scheme.alpha() + scheme.beta);
    const cx inv_v = 1.0 / (2.0 * I * regularized(k) * mab);
    return {1.0 / (2.0 * ma), inv_v, 1.0 / (2.0 * ma), -inv_v};
}

CMat2 mul(const CMat2& a, const CMat2& b) {
    return {a.a00 * b.a00 + a.a01 * b.a10, a.a00 * b.a01 + a.a01 * b.a11,
            a.a10 * b.a00 + a.a11 * b.a10, a.a10 * b.a01 + a.a11 * b.a11};
}

CMat2 mul(const detail::Mat2& a, const CMat2& b) {
    return {a.a00 * b.a00 + a.a01 * b.a10, a.a00 * b.a01 + a.a01 * b.a11,
            a.a10 * b.a00 + a.a11 * b.a10, a.a10 * b.a01 + a.a11 * b.a11};
}

// Forward amplitude map (a_R, b_R) = G (a_L, b_L) to scattering form.
// det G is supplied analytically: (k_in/m_in)/(k_out/m_out).
SMat smat_from_forward(const CMat2& g, cx det_g) {
    return {-g.a10 / g.a11, det_g / g.a11, g.a01 / g.a11, 1.0 / g.a11};
}

}  // namespace

ScatteringSolution scatter(const Structure& structure, double energy,
                           OrderingScheme scheme, const PhysicalConstants& constants) {
    structure.validate();
    if (!std::isfinite(energy))
        throw std::domain_error("scatter: energy must be finite");
    if (!std::isfinite(constants.hbar) || constants.hbar <= 0.0)
        throw std::invalid_argument("scatter: hbar must be positive and finite");

    const std::size_t n = structure.layers.size();
    const std::size_t regions = n + 2;
    const double h2 = constants.hbar * constants.hbar;

    std::vector<double> mass(regions), pot(regions), width(regions, 0.0), q(regions);
    std::vector<cx> k(regions);
    mass[0] = structure.left_lead.mass;
    pot[0] = structure.left_lead.potential;
    for (std::size_t i = 0; i < n; ++i) {
        mass[i + 1] = structure.layers[i].mass;
        pot[i + 1] = structure.layers[i].potential;
        width[i + 1] = structure.layers[i].width;
    }
    mass[n + 1] = structure.right_lead.mass;
    pot[n + 1] = structure.right_lead.potential;
    for (std::size_t j = 0; j < regions; ++j) {
        q[j] = 2.0 * mass[j] * (energy - pot[j]) / h2;
        k[j] = q[j] >= 0.0 ? cx{std::sqrt(q[j]), 0.0} : cx{0.0, std::sqrt(-q[j])};
    }

    if (!(energy > pot[0]))
        throw no_open_channel_error(
            "scatter: energy must exceed the left-lead potential (no open incoming channel)");

    const auto is_threshold = [&](std::size_t j) {
        return std::abs(k[j]) * width[j] < kThresholdPhase;
    };

    struct FusedRun {
        std::size_t entry_point;   // chain point just before the fused block
        std::size_t from_region;   // region whose basis the run starts in
        std::size_t first, last;   // swallowed layer indices
    };

    std::vector<SMat> blocks;
    std::vector<std::ptrdiff_t> canonical(regions, -1);  // chain point of each region's left-edge pair
    std::vector<FusedRun> runs;

    canonical[0] = 0;
    std::size_t current = 0;
    std::size_t j = 1;
    while (j <= n) {
        if (!is_threshold(j)) {
            blocks.push_back(interface_smatrix(mass[current], k[current], mass[j], k[j], scheme));
            canonical[j] = static_cast<std::ptrdiff_t>(blocks.size());
            blocks.push_back(propagation_smatrix(k[j], width[j]));
            current = j;
            ++j;
        } else {
            std::size_t last = j;
            while (last + 1 <= n && is_threshold(last + 1)) ++last;
            const std::size_t exit_region = last + 1;

            runs.push_back({blocks.size(), current, j, last});
            detail::Mat2 u{1.0, 0.0, 0.0, 1.0};
            for (std::size_t jj = j; jj <= last; ++jj) {
                const detail::Mat2 l =
                    detail::region_state_matrix(q[jj], mass[jj], width[jj], scheme.beta);
                u = {l.a00 * u.a00 + l.a01 * u.a10, l.a00 * u.a01 + l.a01 * u.a11,
                     l.a10 * u.a00 + l.a11 * u.a10, l.a10 * u.a01 + l.a11 * u.a11};
            }
            const CMat2 g = mul(state_to_basis(mass[exit_region], k[exit_region], scheme),
                                mul(u, basis_to_state(mass[current], k[current], scheme)));
            const cx det_g = (k[current] / mass[current]) /
                             (regularized(k[exit_region]) / mass[exit_region]);
            blocks.push_back(smat_from_forward(g, det_g));
            canonical[exit_region] = static_cast<std::ptrdiff_t>(blocks.size());

            current = exit_region;
            if (exit_region == n + 1) break;
            blocks.push_back(propagation_smatrix(k[current], width[current]));
            j = exit_region + 1;
        }
    }
    if (current != n + 1) {
        blocks.push_back(
            interface_smatrix(mass[current], k[current], mass[n + 1], k[n + 1], scheme));
        canonical[n + 1] = static_cast<std::ptrdiff_t>(blocks.size());
    }

    const std::size_t nb = blocks.size();
    std::vector<SMat> prefix(nb + 1), suffix(nb + 1);
    prefix[0] = SMat{};
    for (std::size_t i = 0; i < nb; ++i) prefix[i + 1] = star(prefix[i], blocks[i]);
    suffix[nb] = SMat{};
    for (std::size_t i = nb; i-- > 0;) suffix[i] = star(blocks[i], suffix[i + 1]);

    const cx r_total = prefix[nb].r;
    const cx t_total = prefix[nb].t;

    // Amplitudes at chain point i for unit incidence from the left.
    const auto point_amplitudes = [&](std::size_t i) -> RegionAmplitudes {
        const cx a = prefix[i].t / (1.0 - prefix[i].rp * suffix[i].r);
        return {a, suffix[i].r * a};
    };

    ScatteringSolution sol;
    sol.energy = energy;
    sol.amplitudes.resize(regions);
    for (std::size_t reg = 0; reg < regions; ++reg)
        if (canonical[reg] >= 0)
            sol.amplitudes[reg] = point_amplitudes(static_cast<std::size_t>(canonical[reg]));

    // Layers swallowed by fused runs: walk the continuous state across the
    // run. Near k = 0 the plane-wave pair of such a layer is ill-conditioned
    // by nature (A and B grow as 1/k); T and R are unaffected.
    for (const FusedRun& run : runs) {
        const RegionAmplitudes entry = point_amplitudes(run.entry_point);
        const CMat2 w_in = basis_to_state(mass[run.from_region], k[run.from_region], scheme);
        cx u = w_in.a00 * entry.forward + w_in.a01 * entry.backward;
        cx v = w_in.a10 * entry.forward + w_in.a11 * entry.backward;
        for (std::size_t jj = run.first; jj <= run.last; ++jj) {
            const CMat2 w_out = state_to_basis(mass[jj], k[jj], scheme);
            sol.amplitudes[jj] = {w_out.a00 * u + w_out.a01 * v,
                                  w_out.a10 * u + w_out.a11 * v};
            const detail::Mat2 l =
                detail::region_state_matrix(q[jj], mass[jj], width[jj], scheme.beta);
            const cx u_next = l.a00 * u + l.a01 * v;
            v = l.a10 * u + l.a11 * v;
            u = u_next;
        }
    }

    sol.reflection = std::norm(r_total);
    if (q[n + 1] > 0.0) {
        const double flux_ratio = (k[n + 1].real() / mass[n + 1]) / (k[0].real() / mass[0]);
        sol.transmission = flux_ratio * std::norm(t_total);
    } else {
        sol.transmission = 0.0;  // closed right channel: everything reflects
    }
    return sol;
}

}  // namespace pdm
