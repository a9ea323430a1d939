#pragma once

#include <cstdint>
#include <vector>

#include "glcoh/shapes.hpp"

namespace glcoh {

/// Bijection of {0..d-1}, stored as the image sequence.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int d);
    static Permutation transposition(int d, int i, int j);

    int degree() const { return static_cast<int>(img_.size()); }
    int image(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    /// (this ∘ other)(i) = this(other(i)).
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;

    int sign() const;  // +1 or -1
    /// Cycle lengths, weakly decreasing.
    Partition cycle_type() const;

    bool is_identity() const;
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> img_;
};

std::uint64_t factorial(int n);

/// Lexicographic rank of a permutation among all of its degree (Lehmer code).
std::uint64_t lehmer_rank(const Permutation& g);
Permutation lehmer_unrank(std::uint64_t rank, int d);

/// Product of symmetric groups on disjoint blocks of {0..d-1}. Blocks need
/// not be consecutive; uncovered points are fixed (implicit singleton blocks).
class YoungSubgroup {
public:
    /// Consecutive-interval subgroup of shape gamma inside S_d.
    static YoungSubgroup of_shape(const Composition& shape, int d);
    static YoungSubgroup of_blocks(std::vector<std::vector<int>> blocks, int d);

    int degree() const { return d_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    Composition shape() const;
    std::uint64_t order() const;

    bool contains(const Permutation& g) const;
    /// Transpositions of adjacent block members; generate the group.
    std::vector<Permutation> generators() const;
    std::vector<Permutation> elements() const;

    YoungSubgroup conjugated_by(const Permutation& w) const;

private:
    YoungSubgroup(std::vector<std::vector<int>> blocks, int d);
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;  // point -> block id, -1 for fixed points
    int d_ = 0;
};

/// Number of left cosets tau*S_gamma of S_d fixed by left multiplication by
/// g, i.e. cosets with tau^{-1} g tau in S_gamma. Direct enumeration for
/// d <= 6, cycle-type formula beyond.
std::uint64_t fixed_cosets(const Permutation& g, const Composition& gamma);

/// Order of the centralizer of g in S_d: prod_i i^{a_i} a_i! over the cycle
/// type.
std::uint64_t centralizer_order(const Permutation& g);
std::uint64_t centralizer_order(const Partition& cycle_type);

/// Number of elements of the Young subgroup S_gamma whose cycle type in S_d
/// equals t.
std::uint64_t young_elements_with_cycle_type(const Composition& gamma,
                                             const Partition& t);

}  // namespace glcoh
