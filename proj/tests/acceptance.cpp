// Acceptance suite: every release gate in one binary, one line per check.
// Exits 0 only if all checks pass.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "audit.hpp"
#include "helpers.hpp"
#include "pdm1d/pdm1d.hpp"
#include "subprocess.hpp"

using testutil::barrier_structure;
using testutil::rel_diff;
using testutil::step_structure;

namespace {

std::string g_cli_path;

struct Outcome {
    bool pass;
    std::string detail;
};

const std::vector<double> kBetas{-1.0, -0.75, -0.5, -0.25, 0.0};
const std::vector<double> kRightMasses{4.0, 1.0, 0.25};  // mass ratios 1/4, 1, 4

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

// --- 1: flux conservation on random structures ------------------------------
Outcome unitarity() {
    testutil::ScenarioGen gen(190401);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto s = gen.structure(6);
        const double beta = gen.uniform(-1.5, 0.5);
        const double e = gen.energy_above_leads(s);
        const auto sol = pdm::scatter(s, e, {beta});
        worst = std::max(worst, std::abs(sol.transmission + sol.reflection - 1.0));
    }
    return {worst <= 1e-10, "max |T+R-1| = " + fmt(worst) + " over 1000 random structures"};
}

// --- 2: closed forms against the cascade ------------------------------------
Outcome closed_form_equivalence() {
    double worst = 0.0;
    for (double beta : kBetas) {
        for (double m2 : kRightMasses) {
            const pdm::StepParams sp{1.0, m2, 1.0, {beta}, {}};
            const auto step_s = step_structure(sp);
            const pdm::BarrierParams bp{1.0, m2, 1.0, 2.0, {beta}, {}};
            const auto barrier_s = barrier_structure(bp);
            for (int i = 0; i < 500; ++i) {
                const double e = 0.012 + (6.0 - 0.012) * i / 499.0;
                const auto step_sol = pdm::scatter(step_s, e, sp.scheme, sp.constants);
                worst = std::max(worst, rel_diff(step_sol.transmission,
                                                 pdm::step_transmission(sp, e)));
                worst = std::max(worst,
                                 rel_diff(step_sol.reflection, pdm::step_reflection(sp, e)));
                const auto barrier_sol = pdm::scatter(barrier_s, e, bp.scheme, bp.constants);
                worst = std::max(worst, rel_diff(barrier_sol.transmission,
                                                 pdm::barrier_transmission(bp, e)));
            }
        }
    }
    return {worst <= 1e-10,
            "max closed-form vs cascade relative difference = " + fmt(worst) +
                " (500-point grids, 5 orderings x 3 mass ratios, step and barrier)"};
}

// --- 3: high-energy limit of the step ---------------------------------------
Outcome step_limit() {
    double worst = 0.0, worst_neutral = 0.0;
    for (double beta : kBetas) {
        for (double m2 : kRightMasses) {
            const pdm::StepParams p{1.0, m2, 1.0, {beta}, {}};
            const double t = pdm::step_transmission(p, 1e8 * p.V0);
            worst = std::max(worst, std::abs(t - pdm::step_asymptote(p)));
            if (beta == -0.5) worst_neutral = std::max(worst_neutral, std::abs(t - 1.0));
        }
    }
    const bool pass = worst <= 1e-3 && worst_neutral <= 1e-6;
    return {pass, "max |T(1e8 V0) - asymptote| = " + fmt(worst) +
                      "; beta=-1/2 distance from unity = " + fmt(worst_neutral)};
}

// --- 4: transparency energy -------------------------------------------------
Outcome transparency() {
    double worst_r = 0.0, worst_t = 0.0;
    int found = 0;
    for (double beta : kBetas) {
        for (double m2 : kRightMasses) {
            const pdm::StepParams p{1.0, m2, 1.0, {beta}, {}};
            const double s = pdm::sigma(p.m1 / p.m2, beta);
            const auto et = pdm::transparency_energy(p);
            if (s * s < 1.0) {
                if (!et) return {false, "transparency expected but absent"};
                ++found;
                worst_r = std::max(worst_r, pdm::step_reflection(p, *et));
                const pdm::BarrierParams bp{1.0, m2, 1.0, 2.0, {beta}, {}};
                worst_t = std::max(worst_t,
                                   std::abs(pdm::barrier_transmission(bp, *et) - 1.0));
            } else if (et) {
                return {false, "transparency reported for sigma^2 >= 1"};
            }
        }
    }
    // beta = -1/2: no zero of the reflection anywhere up to 1e6 V0.
    for (double m2 : {4.0, 0.25}) {
        const pdm::StepParams p{1.0, m2, 1.0, {-0.5}, {}};
        if (pdm::transparency_energy(p))
            return {false, "transparency reported for beta = -1/2"};
        for (int i = 0; i <= 200; ++i) {
            const double e = p.V0 * std::pow(1e6, i / 200.0) * (1.0 + 1e-9);
            if (!(pdm::step_reflection(p, e) > 0.0))
                return {false, "reflection zero found for beta = -1/2 at E = " + fmt(e)};
        }
    }
    return {found == 4 && worst_r <= 1e-12 && worst_t <= 1e-10,
            "4 transparent cases: max R(E_t) = " + fmt(worst_r) +
                ", max |T_barrier(E_t) - 1| = " + fmt(worst_t) +
                "; beta=-1/2 scan clean up to 1e6 V0"};
}

// --- 5: ordering-neutral equivalences ---------------------------------------
Outcome neutral_equivalence() {
    // Barrier: beta = -1/2 vs the constant-mass-m2 barrier over the full grid.
    const pdm::BarrierParams pdm_case{1.0, 2.0, 1.0, 2.0, {-0.5}, {}};
    const pdm::BarrierParams const_mass{2.0, 2.0, 1.0, 2.0, {-0.5}, {}};
    double worst_barrier = 0.0;
    for (int i = 0; i < 500; ++i) {
        const double e = 0.012 + (6.0 - 0.012) * i / 499.0;
        worst_barrier = std::max(worst_barrier,
                                 std::abs(pdm::barrier_transmission(pdm_case, e) -
                                          pdm::barrier_transmission(const_mass, e)));
    }

    // Reference well: m2 = 1, V0 = 50, a = 1.
    const pdm::WellParams ref{2.0, 1.0, 50.0, 1.0, {-0.5}, {}};
    const auto spectrum = pdm::well_spectrum(ref);
    const auto oracle = pdm::constant_mass_well_spectrum(1.0, 50.0, 1.0);

    // Brute-force level count by sign scan of the pole-free residuals.
    int scanned = 0;
    {
        const double theta_max = 0.5 * std::sqrt(2.0 * 50.0);
        const double s = pdm::sigma(ref.m1 / ref.m2, ref.scheme.beta);
        const auto eta = [&](double t) {
            return std::sqrt(std::max(0.0, theta_max * theta_max - t * t));
        };
        const auto fe = [&](double t) { return t * std::sin(t) - s * eta(t) * std::cos(t); };
        const auto fo = [&](double t) { return t * std::cos(t) + s * eta(t) * std::sin(t); };
        for (const auto& f :
             {std::function<double(double)>(fe), std::function<double(double)>(fo)}) {
            double prev = f(theta_max * 1e-9);
            for (int i = 1; i <= 100000; ++i) {
                const double t = theta_max * (1.0 - 1e-9) * i / 100000.0;
                const double v = f(t);
                if ((v < 0.0) != (prev < 0.0)) ++scanned;
                prev = v;
            }
        }
    }

    if (spectrum.size() != 4 || oracle.size() != 4 || scanned != 4)
        return {false, "level count mismatch: spectrum " + fmt(double(spectrum.size())) +
                           ", oracle " + fmt(double(oracle.size())) + ", sign scan " +
                           fmt(double(scanned))};

    double worst_level = 0.0;
    for (std::size_t i = 0; i < spectrum.size(); ++i)
        worst_level = std::max(worst_level, std::abs(spectrum[i].energy - oracle[i].energy));

    // A decade of outside masses: invisible at beta = -1/2, visible at beta = -1.
    double worst_shift_neutral = 0.0, best_shift_bd = 0.0;
    for (double beta : {-0.5, -1.0}) {
        pdm::WellParams base = ref;
        base.scheme = {beta};
        base.m1 = 0.2;
        const auto base_spec = pdm::well_spectrum(base);
        double max_shift = 0.0;
        for (double m1 : {0.35, 0.7, 1.0, 1.4, 2.0}) {
            pdm::WellParams p = base;
            p.m1 = m1;
            const auto s = pdm::well_spectrum(p);
            if (s.size() != base_spec.size()) max_shift = 1.0;
            for (std::size_t i = 0; i < std::min(s.size(), base_spec.size()); ++i)
                max_shift = std::max(max_shift, std::abs(s[i].energy - base_spec[i].energy));
        }
        if (beta == -0.5)
            worst_shift_neutral = max_shift;
        else
            best_shift_bd = max_shift;
    }

    const bool pass = worst_barrier <= 1e-12 && worst_level <= 1e-9 &&
                      worst_shift_neutral <= 1e-9 && best_shift_bd > 1e-3;
    return {pass, "barrier gap to constant-mass twin = " + fmt(worst_barrier) +
                      "; well level gap to oracle = " + fmt(worst_level) +
                      "; m1-decade shift at beta=-1/2 = " + fmt(worst_shift_neutral) +
                      ", at beta=-1 = " + fmt(best_shift_bd) + " (4 levels)"};
}

// --- 6: thick-barrier asymptote ---------------------------------------------
Outcome thick_barrier() {
    // Worked instance, both sides re-derived from their own expressions.
    const pdm::BarrierParams inst{1.0, 2.0, 1.0, 2.0, {-1.0}, {}};
    const double sh = std::sinh(2.0 * std::sqrt(2.0));
    const double exact_expected = 1.0 / (1.0 + 1.125 * sh * sh);           // 1.2354e-2
    const double approx_expected = (32.0 / 9.0) * std::exp(-4.0 * std::sqrt(2.0));  // 1.2422e-2
    if (rel_diff(pdm::barrier_transmission(inst, 0.5), exact_expected) > 1e-12)
        return {false, "worked instance: exact value drifted"};
    if (rel_diff(pdm::thick_barrier_transmission(inst, 0.5), approx_expected) > 1e-12)
        return {false, "worked instance: asymptote value drifted"};

    double worst = 0.0;
    for (double m1 : {8.0, 2.0, 0.5}) {  // sigma in {1/2, 1, 2} at beta = -1
        for (double a : {8.0, 20.0}) {
            const pdm::BarrierParams p{m1, 2.0, 1.0, a, {-1.0}, {}};
            for (int i = 0; i <= 40; ++i) {
                const double e = (0.1 + 0.8 * i / 40.0) * p.V0;
                const double kappa_a = std::sqrt(2.0 * p.m2 * (p.V0 - e)) * p.a;
                if (kappa_a < 5.0) continue;
                const double err = std::abs(pdm::thick_barrier_transmission(p, e) /
                                                pdm::barrier_transmission(p, e) -
                                            1.0);
                worst = std::max(worst, err);
            }
        }
    }
    return {worst < 0.02, "asymptote vs exact: worked pair (" + fmt(exact_expected) + ", " +
                              fmt(approx_expected) + "); max relative error = " + fmt(worst) +
                              " wherever kappa2*a >= 5 (sigma in {1/2,1,2})"};
}

// --- 7: band-gap trends ------------------------------------------------------
Outcome band_trends() {
    std::string detail;
    bool pass = true;

    {  // ordering-neutral lattice: gaps die out
        const pdm::LatticeParams p{1.0, 2.0, 1.0, 1.0, 1.0, {-0.5}, {}};
        const auto d = pdm::band_diagram(p, 1e-3, 420.0, 2000001);
        if (d.gap_widths.size() < 20) {
            pass = false;
            detail += "beta=-1/2: fewer than 20 gaps resolved; ";
        } else {
            const double ratio = d.gap_widths[19] / d.gap_widths[0];
            pass = pass && ratio < 0.05;
            detail += "beta=-1/2 gap20/gap1 = " + fmt(ratio) + " (< 0.05 required); ";
        }
    }
    {  // mass-ordering lattice: gaps persist
        const pdm::LatticeParams p{1.0, 2.0, 1.0, 1.0, 1.0, {-1.0}, {}};
        const auto d = pdm::band_diagram(p, 1e-3, 700.0, 2000001);
        if (d.gap_widths.size() < 25) {
            pass = false;
            detail += "beta=-1: fewer than 25 gaps resolved; ";
        } else {
            double lo = 1e300, hi = 0.0;
            for (int i = 14; i <= 24; ++i) {
                lo = std::min(lo, d.gap_widths[i]);
                hi = std::max(hi, d.gap_widths[i]);
            }
            const bool positive = lo > 0.0;
            const double spread = (hi - lo) / hi;
            pass = pass && positive && spread < 0.05;
            detail += "beta=-1 gaps 15-25: min = " + fmt(lo) + " (> 0 required), pairwise "
                      "variation = " + fmt(spread) + " (< 0.05 required); ";
        }
        const double s = pdm::sigma(p.m1 / p.m2, p.scheme.beta);
        const double h_err =
            std::abs(pdm::h_factor(p, 1e8 * p.V0) - (s * s + 1.0) / (2.0 * s));
        pass = pass && h_err <= 1e-3;
        detail += "|h(1e8 V0) - (sigma^2+1)/(2 sigma)| = " + fmt(h_err);
    }
    return {pass, detail};
}

// --- 8: audit completeness and flux normalization ----------------------------
Outcome audit_report() {
    const auto entries = pdm::cli::build_audit_report();
    if (entries.size() != 5) return {false, "expected 5 audit entries"};
    for (const auto& e : entries)
        if (!std::isfinite(e.quoted) || !std::isfinite(e.computed) || e.claim.empty())
            return {false, "audit entry missing a value: " + e.claim};

    std::mt19937 rng(5551212);
    std::uniform_real_distribution<double> mass_d(0.3, 4.0), v_d(-1.0, 2.0),
        beta_d(-1.5, 0.5), e_d(0.1, 5.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const pdm::StepParams p{mass_d(rng), mass_d(rng), v_d(rng), {beta_d(rng)}, {}};
        const double e = std::max(0.0, p.V0) + e_d(rng);
        const double cascade = pdm::scatter(step_structure(p), e, p.scheme, p.constants)
                                   .transmission;
        worst = std::max(worst, rel_diff(cascade, pdm::step_transmission(p, e)));
    }
    bool cli_ok = true;
    std::string cli_note;
    if (!g_cli_path.empty()) {
        const auto r = testutil::run_command(g_cli_path + " audit");
        int data_rows = 0;
        std::istringstream in(r.output);
        std::string line;
        std::getline(in, line);  // header
        while (std::getline(in, line))
            if (!line.empty() && line[0] != '#') ++data_rows;
        cli_ok = r.exit_code == 0 && data_rows == 5;
        cli_note = "; CLI audit rows = " + fmt(double(data_rows));
    }
    return {worst <= 1e-12 && cli_ok,
            "5 audit rows with both values; flux T vs closed form over 20 random sets: "
            "max diff = " + fmt(worst) + cli_note};
}

// --- 9: continuity at the barrier top ----------------------------------------
Outcome threshold_continuity() {
    double worst = 0.0;
    for (const auto& p : {pdm::BarrierParams{1.0, 2.0, 1.0, 2.0, {-1.0}, {}},
                          pdm::BarrierParams{1.0, 4.0, 1.0, 2.0, {-0.25}, {}},
                          pdm::BarrierParams{2.0, 0.5, 3.0, 0.8, {0.0}, {}},
                          pdm::BarrierParams{1.0, 1.0, 2.0, 1.5, {-0.5}, {}}}) {
        const double lo = p.V0 * (1.0 - 1e-8), hi = p.V0 * (1.0 + 1e-8);
        worst = std::max(worst, std::abs(pdm::barrier_transmission(p, hi) -
                                         pdm::barrier_transmission(p, lo)));
        const auto s = barrier_structure(p);
        worst = std::max(worst, std::abs(pdm::scatter(s, hi, p.scheme, p.constants).transmission -
                                         pdm::scatter(s, lo, p.scheme, p.constants).transmission));
    }
    return {worst <= 1e-6,
            "max |T(V0(1+1e-8)) - T(V0(1-1e-8))| = " + fmt(worst) +
                " across closed form and cascade"};
}

// --- 10: CLI determinism ------------------------------------------------------
Outcome determinism() {
    if (g_cli_path.empty()) return {false, "CLI path not supplied"};
    const std::string structure_path = "/tmp/pdm1d_acceptance_structure.json";
    {
        std::ofstream f(structure_path);
        f << R"({"beta": -1.0,
                 "left_lead": {"mass": 1.0, "potential": 0.0},
                 "layers": [{"width": 2.0, "mass": 2.0, "potential": 1.0}],
                 "right_lead": {"mass": 1.0, "potential": 0.0}})";
    }
    const std::vector<std::string> invocations = {
        "step --m1 1 --m2 4 --V0 1 --beta -1 --emin 0.1 --emax 5 --points 100",
        "barrier --m1 1 --m2 2 --V0 1 --a 2 --beta -0.5 --emin 0.1 --emax 5 --points 100",
        "well --m1 2 --m2 1 --depth 50 --a 1 --beta -0.5 --oracle",
        "multibarrier --m1 1 --m2 2 --V0 1 --a 1 --b 1 --beta -1 --emin 0.1 --emax 8 "
        "--points 50 --band-grid 20000",
        "scatter --structure " + structure_path + " --emin 0.5 --emax 3 --points 50 --amplitudes",
        "beta-sweep --betas -1 -0.75 -0.5 -0.25 0 --m1 1 --m2 4 --V0 1 --a 1 --b 1",
        "audit --json",
    };
    for (const auto& args : invocations) {
        const auto a = testutil::run_command(g_cli_path + " " + args);
        const auto b = testutil::run_command(g_cli_path + " " + args);
        if (a.exit_code != 0 || b.exit_code != 0)
            return {false, "nonzero exit for: " + args};
        if (a.output != b.output || a.output.empty())
            return {false, "output differs between runs for: " + args};
    }
    return {true, "7 subcommands byte-identical across repeated runs"};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"flux conservation on random structures", unitarity},
        {"closed forms vs transfer-matrix cascade", closed_form_equivalence},
        {"high-energy step transmission limit", step_limit},
        {"transparency energy behaviour", transparency},
        {"ordering-neutral well and barrier equivalence", neutral_equivalence},
        {"thick-barrier asymptote accuracy", thick_barrier},
        {"band-gap trends and lattice coupling limit", band_trends},
        {"audit completeness and flux normalization", audit_report},
        {"continuity through the barrier top", threshold_continuity},
        {"CLI determinism", determinism},
    };

    bool all_pass = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome{false, "exception"};
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        all_pass = all_pass && outcome.pass;
        std::printf("%s  %2zu  %s: %s\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), outcome.detail.c_str());
    }
    std::printf("%s\n", all_pass ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
    return all_pass ? 0 : 1;
}
