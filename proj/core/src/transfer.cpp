#include "pdm1d/transfer.hpp"

#include <cmath>
#include <stdexcept>

#include "pdm1d/errors.hpp"

namespace pdm {

namespace {
constexpr std::complex<double> I{0.0, 1.0};
}

TransferMatrix interface_matrix(double m_left, std::complex<double> k_left,
                                double m_right, std::complex<double> k_right,
                                double x0, OrderingScheme scheme) {
    if (!std::isfinite(m_left) || m_left <= 0.0 || !std::isfinite(m_right) || m_right <= 0.0)
        throw std::invalid_argument("interface_matrix: masses must be positive and finite");
    if (k_right == std::complex<double>{})
        throw threshold_error("interface_matrix: right basis is degenerate (k = 0)");
    if (k_left == std::complex<double>{})
        throw threshold_error("interface_matrix: left basis is degenerate (k = 0)");

    const double ratio = m_right / m_left;
    const double p = std::pow(ratio, scheme.alpha());
    const std::complex<double> q =
        std::pow(ratio, scheme.alpha() + scheme.beta) * (k_right / k_left);
    const std::complex<double> half_sum = 0.5 * (p + q);
    const std::complex<double> half_diff = 0.5 * (p - q);

    const std::complex<double> eL = std::exp(I * k_left * x0);
    const std::complex<double> eR = std::exp(I * k_right * x0);
    return {half_sum * eR / eL, half_diff / (eR * eL),
            half_diff * eR * eL, half_sum * eL / eR};
}

TransferMatrix propagation_matrix(std::complex<double> k, double width) {
    if (!(width >= 0.0) || !std::isfinite(width))
        throw std::invalid_argument("propagation_matrix: width must be non-negative and finite");
    return {std::exp(-I * k * width), 0.0, 0.0, std::exp(I * k * width)};
}

}  // namespace pdm
