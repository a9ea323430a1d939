#pragma once

#include <string>
#include <vector>

namespace glcoh {

/// Weakly decreasing sequence of positive integers. The empty partition
/// (weight 0) is permitted.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Transpose of the Young diagram. An involution.
    Partition conjugate() const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.parts_ < b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// All partitions of n, reverse lexicographic: (n) first, (1,...,1) last.
std::vector<Partition> partitions_of(int n);

/// Sequence of positive integers, order significant.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    explicit Composition(const Partition& p) : Composition(p.parts()) {}

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }

    /// Parts sorted weakly decreasing.
    Partition sorted() const;

    std::string to_string() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend bool operator<(const Composition& a, const Composition& b) {
        return a.parts_ < b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Ordered tuple of partitions (lambda_1 | lambda_2 | ... | lambda_n).
/// Boxes are numbered 0..weight-1 row-major within each block, blocks left to
/// right with cumulative offsets.
class SkewTuple {
public:
    SkewTuple() = default;
    explicit SkewTuple(std::vector<Partition> blocks);

    const std::vector<Partition>& blocks() const { return blocks_; }
    int weight() const { return weight_; }

    SkewTuple blockwise_conjugate() const;

    /// Box sets of the rows, in numbering order. Consecutive intervals.
    std::vector<std::vector<int>> row_blocks() const;

    /// Box sets of the columns of each block under the same numbering.
    /// Not consecutive in general.
    std::vector<std::vector<int>> column_blocks() const;

    /// Concatenation of all row lengths of all blocks.
    Composition row_shape() const;

    std::string to_string() const;

    friend bool operator==(const SkewTuple&, const SkewTuple&) = default;
    friend bool operator<(const SkewTuple& a, const SkewTuple& b) {
        return a.blocks_ < b.blocks_;
    }

private:
    std::vector<Partition> blocks_;
    int weight_ = 0;
};

/// All compositions of n (2^{n-1} of them), lexicographic by first part
/// descending.
std::vector<Composition> compositions_of(int n);

/// All tuples (lambda_1,...,lambda_k) of nonempty partitions with total
/// weight n, over all k.
std::vector<SkewTuple> partition_tuples_of(int n);

}  // namespace glcoh
