#pragma once

#include <cmath>
#include <stdexcept>

namespace pdm {

/// Unit system of a calculation. Natural units (hbar = 1) by default; every
/// formula carries hbar explicitly so SI-like unit systems work unchanged.
struct PhysicalConstants {
    double hbar = 1.0;

    PhysicalConstants() = default;
    explicit PhysicalConstants(double hbar_value) : hbar(hbar_value) {
        if (!std::isfinite(hbar) || hbar <= 0.0)
            throw std::invalid_argument("PhysicalConstants: hbar must be positive and finite");
    }
};

}  // namespace pdm
