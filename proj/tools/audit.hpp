#pragma once

#include <string>
#include <vector>

namespace pdm::cli {

/// One cross-check between an as-quoted closed form and the value obtained
/// here from first principles. Both numbers are always reported; the flag
/// records numerical agreement only, with no claim about intent.
struct AuditEntry {
    std::string claim;
    double quoted;
    double computed;
    bool agree;
    std::string detail;
};

/// The fixed audit suite: transmission normalization, the two high-energy
/// coupling limits, the tunnelling-prefactor peak position, and the
/// cosine-form well eigenvalue condition. Deterministic (fixed instances
/// and a fixed seed for the randomized normalization check).
std::vector<AuditEntry> build_audit_report();

}  // namespace pdm::cli
