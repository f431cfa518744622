#pragma once

#include <complex>

#include "pdm1d/ordering.hpp"

namespace pdm {

/// 2x2 complex matrix acting on plane-wave amplitude pairs (A, B) of
/// psi = A exp(ikx) + B exp(-ikx).
struct TransferMatrix {
    std::complex<double> m00{1.0}, m01{0.0};
    std::complex<double> m10{0.0}, m11{1.0};

    static TransferMatrix identity() noexcept { return {}; }

    std::complex<double> determinant() const noexcept { return m00 * m11 - m01 * m10; }

    TransferMatrix operator*(const TransferMatrix& o) const noexcept {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }
};

/// Junction matrix at x0 between media (m_left, k_left) and (m_right, k_right):
/// solving the two continuity conditions (m^alpha psi and m^(alpha+beta) psi'
/// continuous) with phases exp(+-ik x0) gives M such that
/// (A_left, B_left) = M (A_right, B_right), both bases anchored at x = 0.
/// Its determinant is (k_right/m_right)/(k_left/m_left).
/// Throws threshold_error when either wavenumber vanishes.
TransferMatrix interface_matrix(double m_left, std::complex<double> k_left,
                                double m_right, std::complex<double> k_right,
                                double x0, OrderingScheme scheme);

/// diag(exp(-ik w), exp(+ik w)): rebases a region's amplitudes from its
/// right edge to its left edge.
TransferMatrix propagation_matrix(std::complex<double> k, double width);

}  // namespace pdm
