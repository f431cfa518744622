#pragma once

#include <vector>

namespace pdm {

/// Uniform slab: constant mass and potential over a finite width.
struct Layer {
    double width;
    double mass;
    double potential;
};

/// Semi-infinite outer region.
struct Lead {
    double mass;
    double potential;
};

/// Piecewise-flat geometry: a left lead, zero or more layers, a right lead.
/// The first interface sits at x = 0, the rest at the cumulative layer
/// widths, so interface positions are strictly increasing.
struct Structure {
    Lead left_lead;
    std::vector<Layer> layers;
    Lead right_lead;

    /// Positions of all interfaces, left to right (layers.size() + 1 values).
    std::vector<double> interface_positions() const;

    /// Throws std::invalid_argument naming the offending field if any mass
    /// or width is non-positive or any value is non-finite.
    void validate() const;
};

}  // namespace pdm
