#pragma once

#include "glcoh/poincare.hpp"

namespace glcoh {

/// (t^{2p-2} - 1) * sum_{i=0}^{p^r-1} t^{2pi}; carries negative coefficients
/// and vanishes at t = -1.
PoincareSeries gamma_correction(long long p, int r);

/// Series of H*_P(GL, Gamma^{p(r)}gl): the S^{p(r)} series plus the
/// correction. Throws std::logic_error if any final coefficient is negative
/// (upstream bug).
PoincareSeries gamma_p_series(long long p, int r);

/// p^k(2p^r - 2) + 2p^k - 2, the top cohomological degree for Gamma^{p^k(r)}gl.
Int gamma_top_degree(int k, long long p, int r);

/// Euler characteristics of the S^{p(r)} / Gamma^{p(r)} pair.
struct EulerDualityReport {
    Int sym_euler;
    Int gamma_euler;
    bool equal = false;
};
EulerDualityReport euler_duality_check(long long p, int r);

}  // namespace glcoh
