#include "glcoh/bimodule.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "glcoh/errors.hpp"

namespace glcoh {

namespace {

constexpr int kMaxBimoduleDegree = 8;

Permutation coset_canonical(const Permutation& tau, const Composition& gamma) {
    std::vector<int> img = tau.images();
    int off = 0;
    for (int p : gamma.parts()) {
        std::sort(img.begin() + off, img.begin() + off + p);
        off += p;
    }
    return Permutation(std::move(img));
}

}  // namespace

ElementaryBimodule::ElementaryBimodule(int d, Composition gamma,
                                       int cohomological_degree)
    : d_(d), gamma_(std::move(gamma)), degree_(cohomological_degree) {
    if (d < 1) throw std::invalid_argument("bimodule degree d must be >= 1");
    if (d > kMaxBimoduleDegree)
        throw ScaleGuardError("elementary bimodule limited to d <= 8");
    if (gamma_.weight() != d)
        throw std::invalid_argument("weight(gamma) must equal d");
    if (cohomological_degree < 0 || cohomological_degree % 2 != 0)
        throw std::invalid_argument("cohomological degree must be even and >= 0");
    n_perms_ = static_cast<std::size_t>(factorial(d));
    coset_of_rank_.assign(n_perms_, -1);
    std::vector<int> img(d);
    std::iota(img.begin(), img.end(), 0);
    do {
        Permutation tau{std::vector<int>(img)};
        Permutation rep = coset_canonical(tau, gamma_);
        std::uint64_t rep_rank = lehmer_rank(rep);
        if (coset_of_rank_[rep_rank] == -1) {
            coset_of_rank_[rep_rank] = static_cast<std::int32_t>(coset_reps_.size());
            coset_reps_.push_back(rep);
        }
        coset_of_rank_[lehmer_rank(tau)] = coset_of_rank_[rep_rank];
    } while (std::next_permutation(img.begin(), img.end()));
}

std::size_t ElementaryBimodule::coset_index(const Permutation& tau) const {
    return static_cast<std::size_t>(coset_of_rank_[lehmer_rank(tau)]);
}

std::vector<std::int32_t> ElementaryBimodule::coset_left_map(const Permutation& g) const {
    std::vector<std::int32_t> map(coset_reps_.size());
    for (std::size_t c = 0; c < coset_reps_.size(); ++c)
        map[c] = static_cast<std::int32_t>(coset_index(g.compose(coset_reps_[c])));
    return map;
}

std::vector<std::int32_t> ElementaryBimodule::perm_left_map(const Permutation& g) const {
    std::vector<std::int32_t> map(n_perms_);
    for (std::size_t s = 0; s < n_perms_; ++s)
        map[s] = static_cast<std::int32_t>(
            lehmer_rank(g.compose(lehmer_unrank(s, d_))));
    return map;
}

std::vector<std::int32_t> ElementaryBimodule::perm_right_map(const Permutation& h) const {
    std::vector<std::int32_t> map(n_perms_);
    for (std::size_t s = 0; s < n_perms_; ++s)
        map[s] = static_cast<std::int32_t>(
            lehmer_rank(lehmer_unrank(s, d_).compose(h)));
    return map;
}

std::vector<std::int32_t> ElementaryBimodule::perm_conj_map(const Permutation& g) const {
    Permutation ginv = g.inverse();
    std::vector<std::int32_t> map(n_perms_);
    for (std::size_t s = 0; s < n_perms_; ++s)
        map[s] = static_cast<std::int32_t>(
            lehmer_rank(g.compose(lehmer_unrank(s, d_)).compose(ginv)));
    return map;
}

Int bimodule_dimension(int d, const Composition& gamma) {
    Int dim = factorial(d);
    for (int p : gamma.parts()) dim /= factorial(p);
    dim *= factorial(d);
    return dim;
}

Composition gamma_of_multiset(const std::vector<int>& m) {
    if (m.empty()) throw std::invalid_argument("gamma_of_multiset: empty multiset");
    std::vector<int> sorted = m;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> mult;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i > 0 && sorted[i] == sorted[i - 1])
            ++mult.back();
        else
            mult.push_back(1);
    }
    return Composition(std::move(mult));
}

namespace {

long long power_ll(long long p, int r) {
    long long q = 1;
    for (int i = 0; i < r; ++i) {
        if (q > (1LL << 40)) throw ScaleGuardError("p^r too large");
        q *= p;
    }
    return q;
}

void check_multiset_budget(int d, long long q) {
    // number of multisets = C(q+d-1, d)
    Int count = 1;
    for (int i = 0; i < d; ++i) {
        count *= (q + i);
        count /= (i + 1);
    }
    if (count > 20'000'000)
        throw ScaleGuardError("multiset enumeration over {0..p^r-1} too large");
}

}  // namespace

TensorGlCohomology build_tensor_cohomology(int d, long long p, int r) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    if (r < 0) throw std::invalid_argument("r must be >= 0");
    long long q = power_ll(p, r);
    check_multiset_budget(d, q);
    TensorGlCohomology t;
    t.d = d;
    t.p = p;
    t.r = r;
    std::vector<int> m(d, 0);
    auto rec = [&](auto&& self, int pos, int min_val, int sum) -> void {
        if (pos == d) {
            t.summands.push_back(
                TensorSummand{m, gamma_of_multiset(m), 2 * sum});
            return;
        }
        for (int v = min_val; v < q; ++v) {
            m[pos] = v;
            self(self, pos + 1, v, sum + v);
        }
    };
    rec(rec, 0, 0, 0);
    return t;
}

PoincareSeries total_series(const TensorGlCohomology& t) {
    PoincareSeries s;
    for (const auto& summand : t.summands)
        s.add_term(summand.cohomological_degree,
                   bimodule_dimension(t.d, summand.gamma));
    return s;
}

MultisetCensus multiset_census(int d, long long q) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    if (q < 1) throw std::invalid_argument("q must be >= 1");
    check_multiset_budget(d, q);
    MultisetCensus census;
    std::vector<int> m(d, 0);
    auto rec = [&](auto&& self, int pos, int min_val, int sum) -> void {
        if (pos == d) {
            census[{Composition(gamma_of_multiset(m)).sorted(), sum}] += 1;
            return;
        }
        for (int v = min_val; v < q; ++v) {
            m[pos] = v;
            self(self, pos + 1, v, sum + v);
        }
    };
    rec(rec, 0, 0, 0);
    return census;
}

}  // namespace glcoh
