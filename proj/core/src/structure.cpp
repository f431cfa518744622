#include "pdm1d/structure.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pdm {

namespace {

void require_positive(double v, const std::string& field) {
    if (!std::isfinite(v) || v <= 0.0)
        throw std::invalid_argument("Structure: " + field + " must be positive and finite");
}

void require_finite(double v, const std::string& field) {
    if (!std::isfinite(v))
        throw std::invalid_argument("Structure: " + field + " must be finite");
}

}  // namespace

std::vector<double> Structure::interface_positions() const {
    std::vector<double> xs;
    xs.reserve(layers.size() + 1);
    double x = 0.0;
    xs.push_back(x);
    for (const Layer& layer : layers) {
        x += layer.width;
        xs.push_back(x);
    }
    return xs;
}

void Structure::validate() const {
    require_positive(left_lead.mass, "left_lead.mass");
    require_finite(left_lead.potential, "left_lead.potential");
    require_positive(right_lead.mass, "right_lead.mass");
    require_finite(right_lead.potential, "right_lead.potential");
    for (std::size_t i = 0; i < layers.size(); ++i) {
        const std::string tag = "layers[" + std::to_string(i) + "]";
        require_positive(layers[i].width, tag + ".width");
        require_positive(layers[i].mass, tag + ".mass");
        require_finite(layers[i].potential, tag + ".potential");
    }
}

}  // namespace pdm
