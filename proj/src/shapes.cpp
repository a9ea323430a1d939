#include "glcoh/shapes.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace glcoh {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition{};
    std::vector<int> conj(parts_[0]);
    for (int j = 0; j < parts_[0]; ++j) {
        int count = 0;
        for (int p : parts_)
            if (p > j) ++count;
        conj[j] = count;
    }
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

namespace {

void enumerate_partitions(int n, int max_part, std::vector<int>& acc,
                          std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(acc.empty() ? Partition{} : Partition(acc));
        return;
    }
    for (int first = std::min(n, max_part); first >= 1; --first) {
        acc.push_back(first);
        enumerate_partitions(n - first, first, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate_partitions(n, n, acc, out);
    return out;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Composition::sorted() const {
    std::vector<int> s = parts_;
    std::sort(s.begin(), s.end(), std::greater<int>());
    return s.empty() ? Partition{} : Partition(std::move(s));
}

std::string Composition::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

SkewTuple::SkewTuple(std::vector<Partition> blocks) : blocks_(std::move(blocks)) {
    for (const auto& b : blocks_) weight_ += b.weight();
}

SkewTuple SkewTuple::blockwise_conjugate() const {
    std::vector<Partition> conj;
    conj.reserve(blocks_.size());
    for (const auto& b : blocks_) conj.push_back(b.conjugate());
    return SkewTuple(std::move(conj));
}

std::vector<std::vector<int>> SkewTuple::row_blocks() const {
    std::vector<std::vector<int>> rows;
    int off = 0;
    for (const auto& b : blocks_) {
        for (int len : b.parts()) {
            std::vector<int> row(len);
            std::iota(row.begin(), row.end(), off);
            rows.push_back(std::move(row));
            off += len;
        }
    }
    return rows;
}

std::vector<std::vector<int>> SkewTuple::column_blocks() const {
    std::vector<std::vector<int>> cols;
    int off = 0;
    for (const auto& b : blocks_) {
        const auto& parts = b.parts();
        std::vector<int> row_start(parts.size());
        int s = off;
        for (std::size_t r = 0; r < parts.size(); ++r) {
            row_start[r] = s;
            s += parts[r];
        }
        int width = parts.empty() ? 0 : parts[0];
        for (int c = 0; c < width; ++c) {
            std::vector<int> col;
            for (std::size_t r = 0; r < parts.size(); ++r)
                if (parts[r] > c) col.push_back(row_start[r] + c);
            cols.push_back(std::move(col));
        }
        off += b.weight();
    }
    return cols;
}

Composition SkewTuple::row_shape() const {
    std::vector<int> shape;
    for (const auto& b : blocks_)
        shape.insert(shape.end(), b.parts().begin(), b.parts().end());
    return Composition(std::move(shape));
}

std::string SkewTuple::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) os << '|';
        os << blocks_[i].to_string();
    }
    return os.str();
}

std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw std::invalid_argument("compositions_of: n must be >= 0");
    std::vector<Composition> out;
    std::vector<int> acc;
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
            out.push_back(Composition(acc));
            return;
        }
        for (int first = rem; first >= 1; --first) {
            acc.push_back(first);
            self(self, rem - first);
            acc.pop_back();
        }
    };
    if (n == 0) {
        out.push_back(Composition{});
        return out;
    }
    rec(rec, n);
    return out;
}

std::vector<SkewTuple> partition_tuples_of(int n) {
    std::vector<SkewTuple> out;
    for (const auto& comp : compositions_of(n)) {
        std::vector<std::vector<Partition>> choices;
        for (int part : comp.parts()) choices.push_back(partitions_of(part));
        std::vector<Partition> acc;
        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (i == choices.size()) {
                out.push_back(SkewTuple(acc));
                return;
            }
            for (const auto& lam : choices[i]) {
                acc.push_back(lam);
                self(self, i + 1);
                acc.pop_back();
            }
        };
        rec(rec, 0);
    }
    return out;
}

}  // namespace glcoh
