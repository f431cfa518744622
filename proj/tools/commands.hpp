#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdm::cli {

/// Bad flag combination or out-of-domain parameter (maps to exit code 1).
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SweepSpec {
    double e_min = 0.0;
    double e_max = 0.0;
    std::size_t points = 1000;
    bool logarithmic = false;

    void validate() const;  // throws usage_error
    std::vector<double> energies() const;
};

struct CommonOptions {
    double hbar = 1.0;
    bool json = false;
};

struct StepOptions {
    double m1, m2, V0 = 0.0, beta;
    SweepSpec sweep;
    CommonOptions common;
};

struct BarrierOptions {
    double m1, m2, V0 = 0.0, beta, a;
    SweepSpec sweep;
    CommonOptions common;
};

struct WellOptions {
    double m1, m2, depth, a, beta;
    bool oracle = false;
    CommonOptions common;
};

struct MultibarrierOptions {
    double m1, m2, V0 = 0.0, beta, a, b;
    SweepSpec sweep;
    std::size_t band_grid = 50000;
    CommonOptions common;
};

struct ScatterOptions {
    std::string structure_path;
    std::optional<double> beta_override;
    std::optional<double> hbar_override;
    bool amplitudes = false;
    SweepSpec sweep;
    bool json = false;
};

struct BetaSweepOptions {
    std::vector<double> betas;
    double m1, m2, V0, a, b;
    CommonOptions common;
};

struct AuditOptions {
    CommonOptions common;
};

void run_step(const StepOptions& o, std::ostream& os);
void run_barrier(const BarrierOptions& o, std::ostream& os);
void run_well(const WellOptions& o, std::ostream& os);
void run_multibarrier(const MultibarrierOptions& o, std::ostream& os);
void run_scatter(const ScatterOptions& o, std::ostream& os);
void run_beta_sweep(const BetaSweepOptions& o, std::ostream& os);
void run_audit(const AuditOptions& o, std::ostream& os);

}  // namespace pdm::cli
