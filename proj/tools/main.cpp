#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "pdm1d/errors.hpp"
#include "structure_io.hpp"

namespace {

using namespace pdm::cli;

void add_common(CLI::App* cmd, CommonOptions& common, std::string& out_path) {
    cmd->add_option("--hbar", common.hbar, "Reduced Planck constant (natural units: 1)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_flag("--json", common.json, "Emit JSON-lines records instead of CSV");
    cmd->add_option("--out", out_path, "Write output to a file instead of standard output");
}

void add_sweep(CLI::App* cmd, SweepSpec& sweep) {
    cmd->add_option("--emin", sweep.e_min, "Lowest sweep energy")->required();
    cmd->add_option("--emax", sweep.e_max, "Highest sweep energy")->required();
    cmd->add_option("--points", sweep.points, "Number of sweep points")
        ->capture_default_str();
    cmd->add_flag("--log", sweep.logarithmic, "Logarithmic energy spacing");
}

int dispatch(const std::string& out_path, const std::function<void(std::ostream&)>& run) {
    try {
        if (out_path.empty()) {
            run(std::cout);
        } else {
            std::ofstream file(out_path);
            if (!file) throw usage_error("cannot open output file: " + out_path);
            run(file);
        }
        return 0;
    } catch (const structure_parse_error& e) {
        std::cerr << "error: structure file: " << e.what() << '\n';
        return 1;
    } catch (const pdm::resolution_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"One-dimensional scattering, bound states and band structure for "
                 "piecewise-flat mass and potential profiles"};
    app.require_subcommand(1);

    StepOptions step;
    std::string step_out;
    CLI::App* step_cmd = app.add_subcommand("step", "Abrupt mass/potential step: T(E), R(E)");
    step_cmd->add_option("--m1", step.m1, "Mass on the left")->required()->check(CLI::PositiveNumber);
    step_cmd->add_option("--m2", step.m2, "Mass on the right")->required()->check(CLI::PositiveNumber);
    step_cmd->add_option("--V0", step.V0, "Step height")->capture_default_str();
    step_cmd->add_option("--beta", step.beta, "Ordering parameter")->required();
    add_sweep(step_cmd, step.sweep);
    add_common(step_cmd, step.common, step_out);

    BarrierOptions barrier;
    std::string barrier_out;
    CLI::App* barrier_cmd =
        app.add_subcommand("barrier", "Rectangular mass/potential barrier: T(E)");
    barrier_cmd->add_option("--m1", barrier.m1, "Mass outside")->required()->check(CLI::PositiveNumber);
    barrier_cmd->add_option("--m2", barrier.m2, "Mass inside")->required()->check(CLI::PositiveNumber);
    barrier_cmd->add_option("--V0", barrier.V0, "Barrier height")->capture_default_str();
    barrier_cmd->add_option("--a", barrier.a, "Barrier width")->required()->check(CLI::PositiveNumber);
    barrier_cmd->add_option("--beta", barrier.beta, "Ordering parameter")->required();
    add_sweep(barrier_cmd, barrier.sweep);
    add_common(barrier_cmd, barrier.common, barrier_out);

    WellOptions well;
    std::string well_out;
    CLI::App* well_cmd = app.add_subcommand("well", "Rectangular well bound-state spectrum");
    well_cmd->add_option("--m1", well.m1, "Mass outside")->required()->check(CLI::PositiveNumber);
    well_cmd->add_option("--m2", well.m2, "Mass inside")->required()->check(CLI::PositiveNumber);
    well_cmd->add_option("--depth", well.depth, "Well depth (potential is -depth inside)")
        ->required()
        ->check(CLI::PositiveNumber);
    well_cmd->add_option("--a", well.a, "Well width")->required()->check(CLI::PositiveNumber);
    well_cmd->add_option("--beta", well.beta, "Ordering parameter")->required();
    well_cmd->add_flag("--oracle", well.oracle,
                       "Add the constant-mass-m2 spectrum as a reference column");
    add_common(well_cmd, well.common, well_out);

    MultibarrierOptions lattice;
    std::string lattice_out;
    CLI::App* lattice_cmd = app.add_subcommand(
        "multibarrier", "Periodic mass/potential lattice: dispersion, bands and gaps");
    lattice_cmd->add_option("--m1", lattice.m1, "Mass in the wells")->required()->check(CLI::PositiveNumber);
    lattice_cmd->add_option("--m2", lattice.m2, "Mass in the barriers")->required()->check(CLI::PositiveNumber);
    lattice_cmd->add_option("--V0", lattice.V0, "Barrier height")->capture_default_str();
    lattice_cmd->add_option("--a", lattice.a, "Barrier width")->required()->check(CLI::PositiveNumber);
    lattice_cmd->add_option("--b", lattice.b, "Well width")->required()->check(CLI::PositiveNumber);
    lattice_cmd->add_option("--beta", lattice.beta, "Ordering parameter")->required();
    lattice_cmd->add_option("--band-grid", lattice.band_grid,
                            "Scan resolution for the band/gap summary")
        ->capture_default_str();
    add_sweep(lattice_cmd, lattice.sweep);
    add_common(lattice_cmd, lattice.common, lattice_out);

    ScatterOptions scatter_opts;
    std::string scatter_out;
    CommonOptions scatter_common;
    double scatter_beta = 0.0, scatter_hbar = 0.0;
    CLI::App* scatter_cmd = app.add_subcommand(
        "scatter", "Transfer-matrix scattering through a structure description file");
    scatter_cmd->add_option("--structure", scatter_opts.structure_path,
                            "Structure description file (JSON)")
        ->required();
    CLI::Option* beta_opt = scatter_cmd->add_option(
        "--beta", scatter_beta, "Override the file's ordering parameter");
    CLI::Option* hbar_opt =
        scatter_cmd->add_option("--hbar", scatter_hbar, "Override the file's hbar")
            ->check(CLI::PositiveNumber);
    scatter_cmd->add_flag("--amplitudes", scatter_opts.amplitudes,
                          "Add per-region amplitude columns");
    scatter_cmd->add_flag("--json", scatter_opts.json, "Emit JSON-lines records instead of CSV");
    scatter_cmd->add_option("--out", scatter_out, "Write output to a file");
    add_sweep(scatter_cmd, scatter_opts.sweep);

    BetaSweepOptions beta_sweep;
    std::string beta_sweep_out;
    CLI::App* beta_sweep_cmd = app.add_subcommand(
        "beta-sweep", "Compare ordering parameters: asymptote, envelope and gap trend");
    beta_sweep_cmd->add_option("--betas", beta_sweep.betas, "Ordering parameters to compare")
        ->required()
        ->expected(-1);
    beta_sweep_cmd->add_option("--m1", beta_sweep.m1, "Mass on the left / in the wells")
        ->required()
        ->check(CLI::PositiveNumber);
    beta_sweep_cmd->add_option("--m2", beta_sweep.m2, "Mass on the right / in the barriers")
        ->required()
        ->check(CLI::PositiveNumber);
    beta_sweep_cmd->add_option("--V0", beta_sweep.V0, "Step/barrier height")->required();
    beta_sweep_cmd->add_option("--a", beta_sweep.a, "Barrier width")->required()->check(CLI::PositiveNumber);
    beta_sweep_cmd->add_option("--b", beta_sweep.b, "Well width")->required()->check(CLI::PositiveNumber);
    add_common(beta_sweep_cmd, beta_sweep.common, beta_sweep_out);

    AuditOptions audit;
    std::string audit_out;
    CLI::App* audit_cmd = app.add_subcommand(
        "audit", "Cross-check quoted closed forms against first-principles values");
    add_common(audit_cmd, audit.common, audit_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (step_cmd->parsed())
        return dispatch(step_out, [&](std::ostream& os) { run_step(step, os); });
    if (barrier_cmd->parsed())
        return dispatch(barrier_out, [&](std::ostream& os) { run_barrier(barrier, os); });
    if (well_cmd->parsed())
        return dispatch(well_out, [&](std::ostream& os) { run_well(well, os); });
    if (lattice_cmd->parsed())
        return dispatch(lattice_out, [&](std::ostream& os) { run_multibarrier(lattice, os); });
    if (scatter_cmd->parsed()) {
        if (*beta_opt) scatter_opts.beta_override = scatter_beta;
        if (*hbar_opt) scatter_opts.hbar_override = scatter_hbar;
        return dispatch(scatter_out, [&](std::ostream& os) { run_scatter(scatter_opts, os); });
    }
    if (beta_sweep_cmd->parsed())
        return dispatch(beta_sweep_out, [&](std::ostream& os) { run_beta_sweep(beta_sweep, os); });
    if (audit_cmd->parsed())
        return dispatch(audit_out, [&](std::ostream& os) { run_audit(audit, os); });
    return 1;
}
