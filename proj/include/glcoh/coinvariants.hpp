#pragma once

#include <cstdint>

#include "glcoh/poincare.hpp"
#include "glcoh/shapes.hpp"

namespace glcoh {

/// Number of S_mu-orbits on the basis {([tau], sigma)} of the elementary
/// bimodule kS_d/S_gamma (x) kS_d under the diagonal action
/// g.([tau], sigma) = ([g tau], g sigma g^{-1}), computed by Burnside
/// averaging (1/|S_mu|) sum_g fixed_cosets(g, gamma) * centralizer_order(g).
std::uint64_t orbit_count(const Composition& gamma, const Composition& mu);

/// Independent oracle: explicit BFS orbit enumeration on the full basis.
/// Guarded to d <= 6.
std::uint64_t naive_orbit_count(const Composition& gamma, const Composition& mu);

/// Poincare series of H*_P(GL, S^{mu_1(r)}gl (x) ... (x) S^{mu_n(r)}gl):
/// sum over size-d multisets m over {0..p^r-1} of
/// orbit_count(gamma(m), mu) * t^{2|m|}.
PoincareSeries theorem1_series(const Composition& mu, long long p, int r);
PoincareSeries theorem1_series(const Partition& mu, long long p, int r);

}  // namespace glcoh
