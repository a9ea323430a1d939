#include "glcoh/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace glcoh {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
            throw std::invalid_argument("permutation images must be a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int d) {
    std::vector<int> img(d);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::transposition(int d, int i, int j) {
    std::vector<int> img(d);
    std::iota(img.begin(), img.end(), 0);
    std::swap(img[i], img[j]);
    return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& other) const {
    std::vector<int> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) img[i] = img_[other.img_[i]];
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) img[img_[i]] = static_cast<int>(i);
    return Permutation(std::move(img));
}

int Permutation::sign() const {
    std::vector<bool> seen(img_.size(), false);
    int s = 1;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = img_[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

Partition Permutation::cycle_type() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<int> lens;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = img_[j]) {
            seen[j] = true;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return lens.empty() ? Partition{} : Partition(std::move(lens));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i)) return false;
    return true;
}

std::uint64_t factorial(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

std::uint64_t lehmer_rank(const Permutation& g) {
    const auto& img = g.images();
    int d = g.degree();
    std::uint64_t rank = 0;
    for (int i = 0; i < d; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < d; ++j)
            if (img[j] < img[i]) ++smaller;
        rank += static_cast<std::uint64_t>(smaller) * factorial(d - 1 - i);
    }
    return rank;
}

Permutation lehmer_unrank(std::uint64_t rank, int d) {
    std::vector<int> pool(d);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> img;
    img.reserve(d);
    for (int i = 0; i < d; ++i) {
        std::uint64_t f = factorial(d - 1 - i);
        auto idx = static_cast<std::size_t>(rank / f);
        rank %= f;
        img.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(std::move(img));
}

YoungSubgroup::YoungSubgroup(std::vector<std::vector<int>> blocks, int d)
    : blocks_(std::move(blocks)), block_of_(d, -1), d_(d) {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        for (int i : blocks_[b]) {
            if (i < 0 || i >= d) throw std::invalid_argument("block point out of range");
            if (block_of_[i] != -1) throw std::invalid_argument("blocks must be disjoint");
            block_of_[i] = static_cast<int>(b);
        }
    }
}

YoungSubgroup YoungSubgroup::of_shape(const Composition& shape, int d) {
    if (shape.weight() != d)
        throw std::invalid_argument("Young subgroup shape must have weight d");
    std::vector<std::vector<int>> blocks;
    int off = 0;
    for (int p : shape.parts()) {
        std::vector<int> b(p);
        std::iota(b.begin(), b.end(), off);
        blocks.push_back(std::move(b));
        off += p;
    }
    return YoungSubgroup(std::move(blocks), d);
}

YoungSubgroup YoungSubgroup::of_blocks(std::vector<std::vector<int>> blocks, int d) {
    return YoungSubgroup(std::move(blocks), d);
}

Composition YoungSubgroup::shape() const {
    std::vector<int> s;
    for (const auto& b : blocks_)
        if (!b.empty()) s.push_back(static_cast<int>(b.size()));
    return Composition(std::move(s));
}

std::uint64_t YoungSubgroup::order() const {
    std::uint64_t o = 1;
    for (const auto& b : blocks_) o *= factorial(static_cast<int>(b.size()));
    return o;
}

bool YoungSubgroup::contains(const Permutation& g) const {
    if (g.degree() != d_) return false;
    for (int i = 0; i < d_; ++i) {
        if (block_of_[i] == -1) {
            if (g.image(i) != i) return false;
        } else if (block_of_[g.image(i)] != block_of_[i]) {
            return false;
        }
    }
    return true;
}

std::vector<Permutation> YoungSubgroup::generators() const {
    std::vector<Permutation> gens;
    for (const auto& b : blocks_)
        for (std::size_t i = 0; i + 1 < b.size(); ++i)
            gens.push_back(Permutation::transposition(d_, b[i], b[i + 1]));
    return gens;
}

std::vector<Permutation> YoungSubgroup::elements() const {
    std::vector<Permutation> out{Permutation::identity(d_)};
    for (const auto& b : blocks_) {
        if (b.size() < 2) continue;
        // all permutations of this block, applied on top of what we have
        std::vector<int> order(b.size());
        std::iota(order.begin(), order.end(), 0);
        std::vector<Permutation> block_perms;
        do {
            std::vector<int> img(d_);
            std::iota(img.begin(), img.end(), 0);
            for (std::size_t i = 0; i < b.size(); ++i) img[b[i]] = b[order[i]];
            block_perms.push_back(Permutation(std::move(img)));
        } while (std::next_permutation(order.begin(), order.end()));
        std::vector<Permutation> next;
        next.reserve(out.size() * block_perms.size());
        for (const auto& g : out)
            for (const auto& h : block_perms) next.push_back(g.compose(h));
        out = std::move(next);
    }
    return out;
}

YoungSubgroup YoungSubgroup::conjugated_by(const Permutation& w) const {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(blocks_.size());
    for (const auto& b : blocks_) {
        std::vector<int> nb;
        nb.reserve(b.size());
        for (int i : b) nb.push_back(w.image(i));
        blocks.push_back(std::move(nb));
    }
    return YoungSubgroup(std::move(blocks), d_);
}

std::uint64_t centralizer_order(const Partition& cycle_type) {
    std::map<int, int> mult;
    for (int len : cycle_type.parts()) ++mult[len];
    std::uint64_t r = 1;
    for (auto [len, a] : mult) {
        for (int i = 0; i < a; ++i) r *= static_cast<std::uint64_t>(len);
        r *= factorial(a);
    }
    return r;
}

std::uint64_t centralizer_order(const Permutation& g) {
    return centralizer_order(g.cycle_type());
}

namespace {

// Count elements of S_{gamma} whose cycle lengths, over all blocks, form the
// multiset `remaining`. Distributes the cycles among the blocks recursively.
std::uint64_t distribute(const std::vector<int>& gamma, std::size_t bi,
                         std::map<int, int>& remaining) {
    if (bi == gamma.size()) {
        for (auto& [len, cnt] : remaining)
            if (cnt != 0) return 0;
        return 1;
    }
    int target = gamma[bi];
    // pick a sub-multiset of `remaining` of total weight `target`
    std::vector<int> lens;
    for (auto& [len, cnt] : remaining)
        if (cnt > 0) lens.push_back(len);
    std::uint64_t total = 0;
    std::vector<int> picked(lens.size(), 0);
    auto rec = [&](auto&& self, std::size_t li, int rem) -> void {
        if (rem == 0) {
            // elements of S_target with this cycle type: target! / z(type)
            std::vector<int> type;
            for (std::size_t k = 0; k < lens.size(); ++k)
                for (int c = 0; c < picked[k]; ++c) type.push_back(lens[k]);
            std::sort(type.begin(), type.end(), std::greater<int>());
            std::uint64_t count =
                factorial(target) / centralizer_order(Partition(type));
            for (std::size_t k = 0; k < lens.size(); ++k) remaining[lens[k]] -= picked[k];
            total += count * distribute(gamma, bi + 1, remaining);
            for (std::size_t k = 0; k < lens.size(); ++k) remaining[lens[k]] += picked[k];
            return;
        }
        if (li == lens.size()) return;
        int maxn = std::min(remaining[lens[li]], rem / lens[li]);
        for (int n = 0; n <= maxn; ++n) {
            picked[li] = n;
            self(self, li + 1, rem - n * lens[li]);
        }
        picked[li] = 0;
    };
    rec(rec, 0, target);
    return total;
}

}  // namespace

std::uint64_t young_elements_with_cycle_type(const Composition& gamma,
                                             const Partition& t) {
    if (gamma.weight() != t.weight())
        throw std::invalid_argument("cycle type weight must match gamma weight");
    std::map<int, int> remaining;
    for (int len : t.parts()) ++remaining[len];
    return distribute(gamma.parts(), 0, remaining);
}

namespace {

// Canonical representative of the left coset tau*S_gamma: sort the images of
// tau within each consecutive gamma block.
Permutation coset_canonical(const Permutation& tau, const Composition& gamma) {
    std::vector<int> img = tau.images();
    int off = 0;
    for (int p : gamma.parts()) {
        std::sort(img.begin() + off, img.begin() + off + p);
        off += p;
    }
    return Permutation(std::move(img));
}

std::uint64_t fixed_cosets_by_enumeration(const Permutation& g,
                                          const Composition& gamma) {
    int d = g.degree();
    YoungSubgroup young = YoungSubgroup::of_shape(gamma, d);
    std::set<std::vector<int>> reps;
    std::vector<int> img(d);
    std::iota(img.begin(), img.end(), 0);
    do {
        reps.insert(coset_canonical(Permutation(img), gamma).images());
    } while (std::next_permutation(img.begin(), img.end()));
    std::uint64_t count = 0;
    for (const auto& rep : reps) {
        Permutation tau{std::vector<int>(rep)};
        if (young.contains(tau.inverse().compose(g).compose(tau))) ++count;
    }
    return count;
}

std::uint64_t fixed_cosets_by_formula(const Permutation& g,
                                      const Composition& gamma) {
    Partition t = g.cycle_type();
    std::uint64_t numer =
        centralizer_order(t) * young_elements_with_cycle_type(gamma, t);
    std::uint64_t young_order = 1;
    for (int p : gamma.parts()) young_order *= factorial(p);
    if (numer % young_order != 0)
        throw std::logic_error("fixed_cosets: non-integral coset count");
    return numer / young_order;
}

}  // namespace

std::uint64_t fixed_cosets(const Permutation& g, const Composition& gamma) {
    if (gamma.weight() != g.degree())
        throw std::invalid_argument("fixed_cosets: weight(gamma) must equal degree of g");
    if (g.degree() <= 6) return fixed_cosets_by_enumeration(g, gamma);
    return fixed_cosets_by_formula(g, gamma);
}

}  // namespace glcoh
