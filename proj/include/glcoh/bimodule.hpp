#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "glcoh/perm.hpp"
#include "glcoh/poincare.hpp"
#include "glcoh/shapes.hpp"

namespace glcoh {

/// The bimodule kS_d/S_gamma (x) kS_d, basis pairs ([tau], sigma) with [tau]
/// a left coset of the Young subgroup S_gamma and sigma in S_d, two-sided
/// action g.(e_[tau] (x) e_sigma).h = e_[g tau] (x) e_{g sigma h},
/// concentrated in one even cohomological degree.
///
/// Basis index = coset * n_perms + perm, with permutations in lexicographic
/// (Lehmer) order and cosets keyed by their canonical representative (images
/// sorted within each gamma block).
class ElementaryBimodule {
public:
    ElementaryBimodule(int d, Composition gamma, int cohomological_degree);

    int d() const { return d_; }
    const Composition& gamma() const { return gamma_; }
    int cohomological_degree() const { return degree_; }

    std::size_t n_cosets() const { return coset_reps_.size(); }
    std::size_t n_perms() const { return n_perms_; }
    std::size_t dimension() const { return n_cosets() * n_perms_; }

    std::size_t basis_index(std::size_t coset, std::size_t perm) const {
        return coset * n_perms_ + perm;
    }
    std::size_t coset_part(std::size_t basis) const { return basis / n_perms_; }
    std::size_t perm_part(std::size_t basis) const { return basis % n_perms_; }

    const Permutation& coset_rep(std::size_t coset) const { return coset_reps_[coset]; }
    std::size_t coset_index(const Permutation& tau) const;

    // Factored action maps; a basis move combines a coset map with a perm map.
    std::vector<std::int32_t> coset_left_map(const Permutation& g) const;
    std::vector<std::int32_t> perm_left_map(const Permutation& g) const;    // sigma -> g.sigma
    std::vector<std::int32_t> perm_right_map(const Permutation& h) const;   // sigma -> sigma.h
    std::vector<std::int32_t> perm_conj_map(const Permutation& g) const;    // sigma -> g.sigma.g^{-1}

private:
    int d_;
    Composition gamma_;
    int degree_;
    std::size_t n_perms_;
    std::vector<Permutation> coset_reps_;
    std::vector<std::int32_t> coset_of_rank_;  // perm rank -> coset index
};

/// exact d!/prod(gamma_i!) * d!
Int bimodule_dimension(int d, const Composition& gamma);

/// Multiplicities of the distinct values of m in increasing value order.
Composition gamma_of_multiset(const std::vector<int>& m);

struct TensorSummand {
    std::vector<int> multiset;  // weakly increasing values in {0..p^r-1}
    Composition gamma;
    int cohomological_degree;   // 2 * sum(multiset)
};

/// Graded S_d-bimodule model of H*_P(GL, tensor^{d(r)} gl): one elementary
/// bimodule per size-d multiset over {0..p^r-1}.
struct TensorGlCohomology {
    int d = 0;
    long long p = 0;
    int r = 0;
    std::vector<TensorSummand> summands;
};

TensorGlCohomology build_tensor_cohomology(int d, long long p, int r);

PoincareSeries total_series(const TensorGlCohomology& t);

/// Count of size-d multisets over {0..q-1}, keyed by (sorted multiplicity
/// partition, sum of values). Shared by both series engines.
using MultisetCensus = std::map<std::pair<Partition, int>, Int>;
MultisetCensus multiset_census(int d, long long q);

}  // namespace glcoh
