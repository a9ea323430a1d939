#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "glcoh/bimodule.hpp"
#include "glcoh/perm.hpp"
#include "glcoh/poincare.hpp"
#include "glcoh/shapes.hpp"

namespace glcoh {

/// Coefficient field for the sandwich linear algebra: F_p for prime p, the
/// rationals for p = 0.
struct Field {
    long long p = 0;
    bool rational() const { return p == 0; }
};

/// Sign-twisted subgroup of the box permutations of a tuple: one factor per
/// row of each block.
YoungSubgroup row_group(const SkewTuple& t);

/// Stabilizer of the columns of each block under the same box numbering.
YoungSubgroup column_group(const SkewTuple& t);

enum class SandwichConvention {
    standard,              // alt-invariants on rows, coinvariants on columns
    swapped_sides,         // left/right actions exchanged (composed with
                           // inversion); must give the same dimensions
    coinvariants_on_rows,  // deliberately wrong: negative-control hook
};

/// Element of the bimodule supported on one signed orbit: the listed basis
/// vectors with coefficients +-1.
struct SignedVector {
    std::vector<std::pair<std::int32_t, std::int8_t>> support;
};

/// Basis of { x : g.x = sgn(g) x for g in leftGroup, x.h = sgn(h) x for h in
/// rightGroup }. Since the groups permute the basis up to sign, a basis is
/// given by the sign-consistent orbits; orbits with a sign conflict contribute
/// nothing. In characteristic 2 the sign is trivial.
std::vector<SignedVector> alt_invariants(const ElementaryBimodule& m,
                                         const YoungSubgroup& left_group,
                                         const YoungSubgroup& right_group,
                                         Field field);

/// Two-sided coinvariants of a permutation module: the quotient has the orbit
/// classes as basis and the projection sends a basis vector to its class.
/// Independent of the field.
struct CoinvariantProjection {
    std::vector<std::int32_t> class_of;  // basis index -> orbit class
    std::size_t n_classes = 0;
};
CoinvariantProjection coinvariant_projection(const ElementaryBimodule& m,
                                             const YoungSubgroup& left_group,
                                             const YoungSubgroup& right_group);

/// dim s_left M s_right over the field: the rank of the coinvariant
/// projection restricted to the alt-invariant subspace.
int sandwich_dim(const ElementaryBimodule& m, const SkewTuple& left,
                 const SkewTuple& right, Field field,
                 SandwichConvention convention = SandwichConvention::standard);

/// Same composite with four explicit groups (alt-invariants under the first
/// pair, coinvariants under the second); used to test renumbering invariance.
int sandwich_dim_groups(const ElementaryBimodule& m,
                        const YoungSubgroup& alt_left,
                        const YoungSubgroup& alt_right,
                        const YoungSubgroup& coinv_left,
                        const YoungSubgroup& coinv_right, Field field);

/// The same composite over the rationals, by fraction-free elimination.
int rational_rank(const ElementaryBimodule& m, const SkewTuple& left,
                  const SkewTuple& right);

/// dim of the coinvariants (under one side) of the alt-invariants (under the
/// other side), computed in both nesting orders; the two must agree.
struct ExchangeDims {
    int invariants_first = 0;    // coinvariants of the alt-invariant subspace
    int coinvariants_first = 0;  // alt-invariants of the coinvariant quotient
};
ExchangeDims invariants_coinvariants_exchange(const ElementaryBimodule& m,
                                              const YoungSubgroup& alt_group,
                                              bool alt_on_left,
                                              const YoungSubgroup& coinv_group,
                                              Field field);

struct Prop23Options {
    int dmax = 5;  // sandwich bases grow like (d!)^2; raise explicitly
    SandwichConvention convention = SandwichConvention::standard;
};

/// Poincare series of H*_P(GL, S^{mu_1(r)}gl (x) ... (x) S^{mu_n(r)}gl) via
/// the sandwich path: sum over multisets m and over tuples (lambda_i |- mu_i)
/// of sandwich_dim(B_m, Lambda, Lambda, F_p) t^{2|m|}. Must match
/// theorem1_series.
PoincareSeries prop23_series(const Composition& mu, long long p, int r,
                             const Prop23Options& opts = {});
PoincareSeries prop23_series(const Partition& mu, long long p, int r,
                             const Prop23Options& opts = {});

/// Graded sandwich dimensions of one (left, right) tuple pair across the
/// whole tensor cohomology: sum over multisets of
/// sandwich_dim(B_m, left, right, F_p) t^{2|m|}.
PoincareSeries ext_series(const SkewTuple& left, const SkewTuple& right,
                          long long p, int r, const Prop23Options& opts = {});

}  // namespace glcoh
