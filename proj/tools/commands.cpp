#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "audit.hpp"
#include "output.hpp"
#include "pdm1d/pdm1d.hpp"
#include "structure_io.hpp"

namespace pdm::cli {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require(bool ok, const std::string& message) {
    if (!ok) throw usage_error(message);
}

std::string interval_text(double lo, double hi) {
    return "[" + format_number(lo) + ", " + format_number(hi) + "] width " +
           format_number(hi - lo);
}

}  // namespace

void SweepSpec::validate() const {
    require(std::isfinite(e_min) && std::isfinite(e_max) && e_min < e_max,
            "sweep: require emin < emax (both finite)");
    require(points >= 2, "sweep: require at least 2 points");
    if (logarithmic) require(e_min > 0.0, "sweep: logarithmic spacing requires emin > 0");
}

std::vector<double> SweepSpec::energies() const {
    validate();
    std::vector<double> es(points);
    if (logarithmic) {
        const double ratio = std::log(e_max / e_min);
        for (std::size_t i = 0; i < points; ++i)
            es[i] = e_min * std::exp(ratio * static_cast<double>(i) /
                                     static_cast<double>(points - 1));
    } else {
        for (std::size_t i = 0; i < points; ++i)
            es[i] = e_min + (e_max - e_min) * static_cast<double>(i) /
                                static_cast<double>(points - 1);
    }
    return es;
}

void run_step(const StepOptions& o, std::ostream& os) {
    o.sweep.validate();
    require(o.sweep.e_min > 0.0, "step: energies must be positive (set --emin > 0)");
    const StepParams p{o.m1, o.m2, o.V0, {o.beta}, PhysicalConstants(o.common.hbar)};

    TableWriter w(os, o.common.json, {"energy", "transmission", "reflection"});
    for (double e : o.sweep.energies())
        w.row({Cell::num(e), Cell::num(step_transmission(p, e)),
               Cell::num(step_reflection(p, e))});

    w.note("asymptote", format_number(step_asymptote(p)));
    std::string transparency = "none";
    if (p.V0 > 0.0)
        if (const auto et = transparency_energy(p)) transparency = format_number(*et);
    w.note("transparency_energy", transparency);
}

void run_barrier(const BarrierOptions& o, std::ostream& os) {
    o.sweep.validate();
    require(o.sweep.e_min > 0.0, "barrier: energies must be positive (set --emin > 0)");
    const BarrierParams p{o.m1, o.m2, o.V0, o.a, {o.beta}, PhysicalConstants(o.common.hbar)};

    TableWriter w(os, o.common.json, {"energy", "transmission", "reflection"});
    for (double e : o.sweep.energies()) {
        const double t = barrier_transmission(p, e);
        w.row({Cell::num(e), Cell::num(t), Cell::num(1.0 - t)});
    }

    std::string transparency = "none";
    if (p.V0 > 0.0)
        if (const auto et = transparency_energy(step_params(p))) transparency = format_number(*et);
    w.note("transparency_energy", transparency);

    // Full-transmission resonances at k2 a = n pi, any ordering.
    std::string resonances;
    const double hbar = p.constants.hbar;
    int listed = 0;
    for (int n = 1; listed < 12; ++n) {
        const double e = p.V0 + n * n * kPi * kPi * hbar * hbar / (2.0 * p.m2 * p.a * p.a);
        if (e > o.sweep.e_max) break;
        if (e < o.sweep.e_min) continue;
        resonances += (resonances.empty() ? "" : " ") + format_number(e);
        ++listed;
    }
    w.note("ramsauer_energies", resonances.empty() ? "none in range" : resonances);
}

void run_well(const WellOptions& o, std::ostream& os) {
    const WellParams p{o.m1, o.m2, o.depth, o.a, {o.beta}, PhysicalConstants(o.common.hbar)};
    const Spectrum spectrum = well_spectrum(p);
    const Spectrum reference =
        o.oracle ? constant_mass_well_spectrum(o.m2, o.depth, o.a, p.constants) : Spectrum{};

    std::vector<std::string> columns{"index", "parity", "energy"};
    if (o.oracle) columns.push_back("constant_mass_m2_energy");
    TableWriter w(os, o.common.json, columns);
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        std::vector<Cell> cells{Cell::num(static_cast<double>(i)),
                                Cell::str(spectrum[i].parity == Parity::even ? "even" : "odd"),
                                Cell::num(spectrum[i].energy)};
        if (o.oracle)
            cells.push_back(i < reference.size() ? Cell::num(reference[i].energy)
                                                 : Cell::none());
        w.row(cells);
    }
    w.note("bound_states", format_number(static_cast<double>(spectrum.size())));
}

void run_multibarrier(const MultibarrierOptions& o, std::ostream& os) {
    o.sweep.validate();
    require(o.sweep.e_min > 0.0, "multibarrier: energies must be positive (set --emin > 0)");
    require(o.band_grid >= 2, "multibarrier: --band-grid must be at least 2");
    const LatticeParams p{o.m1, o.m2,      o.V0,
                          o.a,  o.b,       {o.beta},
                          PhysicalConstants(o.common.hbar)};

    TableWriter w(os, o.common.json, {"energy", "dispersion_rhs", "quasimomentum"});
    for (double e : o.sweep.energies()) {
        const double rhs = dispersion_rhs(p, e);
        const auto pq = quasimomentum(p, e);
        w.row({Cell::num(e), Cell::num(rhs), pq ? Cell::num(*pq) : Cell::none()});
    }

    const BandDiagram diagram = band_diagram(p, o.sweep.e_min, o.sweep.e_max, o.band_grid);
    w.note("bands", format_number(static_cast<double>(diagram.allowed.size())));
    w.note("gaps", format_number(static_cast<double>(diagram.gap_widths.size())));
    for (std::size_t i = 0; i < diagram.allowed.size(); ++i)
        w.note("band " + std::to_string(i + 1),
               interval_text(diagram.allowed[i].lower, diagram.allowed[i].upper));
    for (std::size_t i = 0; i < diagram.gap_widths.size(); ++i)
        w.note("gap " + std::to_string(i + 1),
               interval_text(diagram.allowed[i].upper, diagram.allowed[i + 1].lower));
}

void run_scatter(const ScatterOptions& o, std::ostream& os) {
    StructureFile file = load_structure_file(o.structure_path);
    if (o.beta_override) file.beta = *o.beta_override;
    if (o.hbar_override) file.hbar = *o.hbar_override;
    const OrderingScheme scheme{file.beta};
    const PhysicalConstants constants(file.hbar);

    o.sweep.validate();
    require(o.sweep.e_min > file.structure.left_lead.potential,
            "scatter: the sweep must start above the left-lead potential "
            "(no open incoming channel below it)");

    std::vector<std::string> columns{"energy", "transmission", "reflection"};
    const std::size_t regions = file.structure.layers.size() + 2;
    if (o.amplitudes) {
        for (std::size_t r = 0; r < regions; ++r) {
            const std::string tag = std::to_string(r);
            columns.push_back("re_A" + tag);
            columns.push_back("im_A" + tag);
            columns.push_back("re_B" + tag);
            columns.push_back("im_B" + tag);
        }
    }

    TableWriter w(os, o.json, columns);
    for (double e : o.sweep.energies()) {
        const ScatteringSolution sol = scatter(file.structure, e, scheme, constants);
        std::vector<Cell> cells{Cell::num(e), Cell::num(sol.transmission),
                                Cell::num(sol.reflection)};
        if (o.amplitudes) {
            for (const RegionAmplitudes& amp : sol.amplitudes) {
                cells.push_back(Cell::num(amp.forward.real()));
                cells.push_back(Cell::num(amp.forward.imag()));
                cells.push_back(Cell::num(amp.backward.real()));
                cells.push_back(Cell::num(amp.backward.imag()));
            }
        }
        w.row(cells);
    }
}

void run_beta_sweep(const BetaSweepOptions& o, std::ostream& os) {
    require(!o.betas.empty(), "beta-sweep: provide at least one --betas value");
    require(o.V0 > 0.0, "beta-sweep: requires a barrier height --V0 > 0");
    const PhysicalConstants constants(o.common.hbar);

    // Scan far enough in energy to index ~26 gaps of the lattice.
    const double hbar = constants.hbar;
    const double phase_rate =
        (o.b * std::sqrt(2.0 * o.m1) + o.a * std::sqrt(2.0 * o.m2)) / hbar;
    const double e_top = std::pow(27.0 * kPi / phase_rate, 2.0) + o.V0;

    TableWriter w(os, o.common.json,
                  {"beta", "sigma", "step_asymptote", "barrier_envelope_min", "gap20_width"});
    for (double beta : o.betas) {
        const OrderingScheme scheme{beta};
        const double s = sigma(o.m1 / o.m2, beta);
        const StepParams sp{o.m1, o.m2, o.V0, scheme, constants};
        const BarrierParams bp{o.m1, o.m2, o.V0, o.a, scheme, constants};
        const LatticeParams lp{o.m1, o.m2, o.V0, o.a, o.b, scheme, constants};

        const double envelope_min = 1.0 / (1.0 + g_factor(bp, 1e8 * o.V0));
        const BandDiagram diagram = band_diagram(lp, 1e-3 * o.V0, e_top, 400000);
        const Cell gap20 = diagram.gap_widths.size() >= 20
                               ? Cell::num(diagram.gap_widths[19])
                               : Cell::none();
        w.row({Cell::num(beta), Cell::num(s), Cell::num(step_asymptote(sp)),
               Cell::num(envelope_min), gap20});
    }
}

void run_audit(const AuditOptions& o, std::ostream& os) {
    const std::vector<AuditEntry> entries = build_audit_report();
    TableWriter w(os, o.common.json, {"claim", "quoted", "computed", "agree"});
    for (const AuditEntry& e : entries)
        w.row({Cell::str(e.claim), Cell::num(e.quoted), Cell::num(e.computed),
               Cell::str(e.agree ? "yes" : "no")});
    for (const AuditEntry& e : entries) w.note(e.claim, e.detail);
}

}  // namespace pdm::cli
