#pragma once

#include <stdexcept>

namespace pdm {

/// A plane-wave basis degenerates (k = 0) where an invertible one is needed.
struct threshold_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Scattering requested at an energy with no propagating incoming channel.
struct no_open_channel_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// A scan grid was too coarse to resolve the feature it looked for.
struct resolution_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pdm
