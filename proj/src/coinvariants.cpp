#include "glcoh/coinvariants.hpp"

#include <map>
#include <stdexcept>
#include <vector>

#include "glcoh/bimodule.hpp"
#include "glcoh/errors.hpp"
#include "glcoh/perm.hpp"

namespace glcoh {

std::uint64_t orbit_count(const Composition& gamma, const Composition& mu) {
    if (gamma.weight() != mu.weight())
        throw std::invalid_argument("orbit_count: weight(gamma) != weight(mu)");
    int d = gamma.weight();
    if (d == 0) return 1;
    YoungSubgroup group = YoungSubgroup::of_shape(mu, d);
    // fixed_cosets and centralizer_order depend only on the cycle type
    std::map<Partition, std::uint64_t> fixed_by_type;
    std::uint64_t total = 0;
    for (const auto& g : group.elements()) {
        Partition t = g.cycle_type();
        auto it = fixed_by_type.find(t);
        if (it == fixed_by_type.end())
            it = fixed_by_type.emplace(t, fixed_cosets(g, gamma)).first;
        total += it->second * centralizer_order(t);
    }
    std::uint64_t order = group.order();
    if (total % order != 0)
        throw std::logic_error("orbit_count: Burnside sum not divisible by group order");
    return total / order;
}

std::uint64_t naive_orbit_count(const Composition& gamma, const Composition& mu) {
    if (gamma.weight() != mu.weight())
        throw std::invalid_argument("naive_orbit_count: weight mismatch");
    int d = gamma.weight();
    if (d == 0) return 1;
    if (d > 6)
        throw std::domain_error("naive_orbit_count: enumeration guarded to d <= 6");
    ElementaryBimodule m(d, gamma, 0);
    YoungSubgroup group = YoungSubgroup::of_shape(mu, d);
    struct Move {
        std::vector<std::int32_t> coset;
        std::vector<std::int32_t> conj;
    };
    std::vector<Move> moves;
    for (const auto& g : group.generators())
        moves.push_back(Move{m.coset_left_map(g), m.perm_conj_map(g)});
    std::size_t n = m.dimension();
    std::vector<std::int32_t> label(n, -1);
    std::vector<std::size_t> stack;
    std::uint64_t orbits = 0;
    for (std::size_t start = 0; start < n; ++start) {
        if (label[start] != -1) continue;
        label[start] = static_cast<std::int32_t>(orbits);
        stack.push_back(start);
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            std::size_t c = m.coset_part(x), s = m.perm_part(x);
            for (const auto& mv : moves) {
                std::size_t y = m.basis_index(
                    static_cast<std::size_t>(mv.coset[c]),
                    static_cast<std::size_t>(mv.conj[s]));
                if (label[y] == -1) {
                    label[y] = label[start];
                    stack.push_back(y);
                }
            }
        }
        ++orbits;
    }
    return orbits;
}

PoincareSeries theorem1_series(const Composition& mu, long long p, int r) {
    if (!is_prime(p)) throw std::invalid_argument("theorem1_series: p must be prime");
    if (r < 0) throw std::invalid_argument("theorem1_series: r must be >= 0");
    int d = mu.weight();
    if (d < 1) throw std::invalid_argument("theorem1_series: weight(mu) must be >= 1");
    long long q = 1;
    for (int i = 0; i < r; ++i) {
        if (q > (1LL << 40)) throw ScaleGuardError("p^r too large");
        q *= p;
    }
    std::map<Partition, std::uint64_t> counts;
    PoincareSeries series;
    for (const auto& [key, count] : multiset_census(d, q)) {
        const auto& [gamma_sorted, value_sum] = key;
        auto it = counts.find(gamma_sorted);
        if (it == counts.end())
            it = counts.emplace(gamma_sorted,
                                orbit_count(Composition(gamma_sorted), mu)).first;
        series.add_term(2 * value_sum, count * Int(it->second));
    }
    return series;
}

PoincareSeries theorem1_series(const Partition& mu, long long p, int r) {
    return theorem1_series(Composition(mu), p, r);
}

}  // namespace glcoh
