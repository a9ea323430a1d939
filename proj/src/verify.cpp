#include "glcoh/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "glcoh/bimodule.hpp"
#include "glcoh/coinvariants.hpp"
#include "glcoh/formulas.hpp"
#include "glcoh/perm.hpp"

namespace glcoh {

namespace {

struct Suite {
    const VerifyOptions& opts;
    std::vector<PropertyResult> results;
    std::mt19937 rng;

    explicit Suite(const VerifyOptions& o) : opts(o), rng(o.seed) {}

    void record(const std::string& name, bool ok, const std::string& detail) {
        results.push_back({name, ok, detail});
    }

    // One property: run `body`, which returns an empty string on success and
    // a counterexample description on the first failure.
    template <class Body>
    void check(const std::string& name, Body&& body) {
        std::string detail = body();
        record(name, detail.empty(), detail.empty() ? "ok" : detail);
    }

    Composition random_composition(int d) {
        std::vector<int> parts;
        int left = d;
        while (left > 0) {
            std::uniform_int_distribution<int> dist(1, left);
            int part = dist(rng);
            parts.push_back(part);
            left -= part;
        }
        return Composition(std::move(parts));
    }

    Permutation random_permutation(int d) {
        std::vector<int> img(d);
        std::iota(img.begin(), img.end(), 0);
        std::shuffle(img.begin(), img.end(), rng);
        return Permutation(std::move(img));
    }

    void combinatorics_suite() {
        check("fixed_cosets enumeration vs cycle-type formula (d<=6)", [&] {
            for (int d = 1; d <= 6; ++d) {
                for (const auto& gamma_p : partitions_of(d)) {
                    Composition gamma(gamma_p);
                    std::uint64_t div = 1;
                    for (int part : gamma.parts()) div *= factorial(part);
                    for (const auto& t : partitions_of(d)) {
                        // representative permutation with cycle type t
                        std::vector<int> img(d);
                        int off = 0;
                        for (int len : t.parts()) {
                            for (int i = 0; i < len; ++i)
                                img[off + i] = off + (i + 1) % len;
                            off += len;
                        }
                        Permutation g{std::move(img)};
                        std::uint64_t by_formula =
                            centralizer_order(t) *
                            young_elements_with_cycle_type(gamma, t) / div;
                        if (fixed_cosets(g, gamma) != by_formula) {
                            std::ostringstream os;
                            os << "d=" << d << " gamma=(" << gamma.to_string()
                               << ") type=(" << t.to_string() << ")";
                            return os.str();
                        }
                    }
                }
            }
            return std::string();
        });

        check("centralizer_order * class size = d! (d<=6)", [&] {
            for (int d = 1; d <= 6; ++d) {
                std::map<Partition, std::uint64_t> class_size;
                std::uint64_t n = factorial(d);
                for (std::uint64_t s = 0; s < n; ++s)
                    ++class_size[lehmer_unrank(s, d).cycle_type()];
                for (const auto& [t, size] : class_size)
                    if (centralizer_order(t) * size != n)
                        return "d=" + std::to_string(d) + " type=(" +
                               t.to_string() + ")";
            }
            return std::string();
        });

        check("conjugate is an involution (weight<=10)", [&] {
            for (int n = 0; n <= 10; ++n)
                for (const auto& lam : partitions_of(n))
                    if (lam.conjugate().conjugate() != lam)
                        return "(" + lam.to_string() + ")";
            return std::string();
        });

        check("row and column groups intersect trivially (weight<=6)", [&] {
            for (int n = 1; n <= 6; ++n) {
                for (const auto& t : partition_tuples_of(n)) {
                    YoungSubgroup rows = row_group(t), cols = column_group(t);
                    const YoungSubgroup& small =
                        rows.order() <= cols.order() ? rows : cols;
                    const YoungSubgroup& big =
                        rows.order() <= cols.order() ? cols : rows;
                    for (const auto& g : small.elements())
                        if (!g.is_identity() && big.contains(g))
                            return "tuple " + t.to_string();
                }
            }
            return std::string();
        });
    }

    void poincare_suite() {
        check("e_r_series at t=1 equals p^r", [&] {
            for (long long p : opts.primes)
                for (int r = 0; r <= opts.rmax; ++r) {
                    Int q = 1;
                    for (int i = 0; i < r; ++i) q *= p;
                    if (e_r_series(p, r).value_at_one() != q)
                        return "p=" + std::to_string(p) +
                               " r=" + std::to_string(r);
                }
            return std::string();
        });
    }

    void tensor_suite() {
        check("total_series at t=1 equals d! * (p^r)^d (d<=6)", [&] {
            for (int d = 1; d <= 6; ++d)
                for (long long p : opts.primes)
                    for (int r = 0; r <= opts.rmax; ++r) {
                        Int q = 1;
                        for (int i = 0; i < r; ++i) q *= p;
                        Int expected = factorial(d);
                        for (int i = 0; i < d; ++i) expected *= q;
                        auto t = build_tensor_cohomology(d, p, r);
                        if (total_series(t).value_at_one() != expected)
                            return "d=" + std::to_string(d) +
                                   " p=" + std::to_string(p) +
                                   " r=" + std::to_string(r);
                    }
            return std::string();
        });

        check("d=1 tensor model reproduces e_r_series", [&] {
            for (long long p : opts.primes)
                for (int r = 0; r <= opts.rmax; ++r)
                    if (total_series(build_tensor_cohomology(1, p, r)) !=
                        e_r_series(p, r))
                        return "p=" + std::to_string(p) +
                               " r=" + std::to_string(r);
            return std::string();
        });
    }

    void coinvariants_suite() {
        check("orbit_count vs naive enumeration (exhaustive d<=naive_dmax)", [&] {
            for (int d = 1; d <= opts.naive_dmax; ++d) {
                auto comps = compositions_of(d);
                for (const auto& gamma : comps)
                    for (const auto& mu : comps)
                        if (orbit_count(gamma, mu) != naive_orbit_count(gamma, mu))
                            return "gamma=(" + gamma.to_string() + ") mu=(" +
                                   mu.to_string() + ")";
            }
            return std::string();
        });

        check("orbit_count vs naive enumeration (random larger d)", [&] {
            int d = opts.naive_dmax + 1;
            if (d > 6) d = 6;  // naive enumeration guard
            for (int i = 0; i < opts.naive_random_cases; ++i) {
                Composition gamma = random_composition(d);
                Composition mu = random_composition(d);
                if (orbit_count(gamma, mu) != naive_orbit_count(gamma, mu))
                    return "gamma=(" + gamma.to_string() + ") mu=(" +
                           mu.to_string() + ")";
            }
            return std::string();
        });

        check("theorem1_series has even degrees and nonnegative coefficients", [&] {
            for (int w = 1; w <= opts.dmax; ++w)
                for (const auto& mu : partitions_of(w))
                    for (long long p : opts.primes)
                        for (int r = 1; r <= opts.rmax; ++r) {
                            auto s = theorem1_series(mu, p, r);
                            if (!s.even_degrees_only() || !s.nonnegative())
                                return "mu=(" + mu.to_string() + ") p=" +
                                       std::to_string(p) + " r=" +
                                       std::to_string(r);
                        }
            return std::string();
        });

        check("theorem1_series invariant under reordering mu (weight<=5)", [&] {
            for (int w = 1; w <= 5; ++w)
                for (const auto& mu : compositions_of(w)) {
                    Partition sorted = mu.sorted();
                    if (Composition(sorted) == mu) continue;
                    for (long long p : {2LL, 3LL})
                        if (theorem1_series(mu, p, 1) !=
                            theorem1_series(Composition(sorted), p, 1))
                            return "mu=(" + mu.to_string() + ") p=" +
                                   std::to_string(p);
                }
            return std::string();
        });

        check("theorem1_series <= total_series coefficientwise", [&] {
            for (int w = 1; w <= opts.dmax; ++w)
                for (const auto& mu : partitions_of(w))
                    for (long long p : opts.primes)
                        for (int r = 1; r <= opts.rmax; ++r) {
                            auto s = theorem1_series(mu, p, r);
                            auto tot =
                                total_series(build_tensor_cohomology(w, p, r));
                            if (!(tot - s).nonnegative())
                                return "mu=(" + mu.to_string() + ") p=" +
                                       std::to_string(p) + " r=" +
                                       std::to_string(r);
                        }
            return std::string();
        });

        check("untwisted degree-0 count equals number of conjugacy classes", [&] {
            for (int d = 1; d <= 6; ++d) {
                Composition full({d});
                std::uint64_t classes = partitions_of(d).size();
                if (orbit_count(full, full) != classes)
                    return "d=" + std::to_string(d);
                if (theorem1_series(Partition({d}), 2, 0).coefficient(0) !=
                    Int(classes))
                    return "series d=" + std::to_string(d);
            }
            return std::string();
        });
    }

    void sandwich_suite() {
        check("path equivalence: sandwich series = orbit series", [&] {
            std::vector<long long> primes = opts.primes;
            for (int w = 1; w <= opts.dmax; ++w)
                for (const auto& mu : partitions_of(w))
                    for (long long p : primes)
                        for (int r = 1; r <= opts.rmax; ++r) {
                            Prop23Options po;
                            po.convention = opts.convention;
                            auto sandwich = prop23_series(mu, p, r, po);
                            auto orbit = theorem1_series(mu, p, r);
                            if (sandwich != orbit) {
                                std::ostringstream os;
                                os << "mu=(" << mu.to_string() << ") p=" << p
                                   << " r=" << r << ": sandwich "
                                   << sandwich.to_string() << " vs orbit "
                                   << orbit.to_string();
                                return os.str();
                            }
                        }
            return std::string();
        });

        check("sandwich_dim independent of the characteristic", [&] {
            for (int d = 1; d <= opts.dmax; ++d) {
                auto tuples = partition_tuples_of(d);
                for (const auto& gamma : partitions_of(d)) {
                    ElementaryBimodule m(d, Composition(gamma), 0);
                    for (const auto& tl : tuples)
                        for (const auto& tr : tuples) {
                            int first = -1;
                            for (long long p : {2LL, 3LL, 5LL, 7LL}) {
                                int dim = sandwich_dim(m, tl, tr, Field{p},
                                                       opts.convention);
                                if (first == -1)
                                    first = dim;
                                else if (dim != first)
                                    return "gamma=(" + gamma.to_string() +
                                           ") left=" + tl.to_string() +
                                           " right=" + tr.to_string() +
                                           " p=" + std::to_string(p);
                            }
                        }
                }
            }
            return std::string();
        });

        check("base change: F_p dim <= rational rank, equal for p > d", [&] {
            for (int d = 1; d <= opts.dmax; ++d) {
                auto tuples = partition_tuples_of(d);
                for (const auto& gamma : partitions_of(d)) {
                    ElementaryBimodule m(d, Composition(gamma), 0);
                    for (const auto& tl : tuples)
                        for (const auto& tr : tuples) {
                            int rat = sandwich_dim(m, tl, tr, Field{0},
                                                   opts.convention);
                            for (long long p : {2LL, 3LL, 5LL, 7LL}) {
                                int dim = sandwich_dim(m, tl, tr, Field{p},
                                                       opts.convention);
                                if (dim > rat || (p > d && dim != rat))
                                    return "gamma=(" + gamma.to_string() +
                                           ") left=" + tl.to_string() +
                                           " right=" + tr.to_string() +
                                           " p=" + std::to_string(p);
                            }
                        }
                }
            }
            return std::string();
        });

        check("invariants/coinvariants exchange (both nesting orders agree)", [&] {
            std::vector<Field> fields = {Field{0}, Field{2}, Field{3}, Field{5}};
            for (int d = 1; d <= std::min(opts.dmax, 3); ++d) {
                auto tuples = partition_tuples_of(d);
                for (const auto& gamma : partitions_of(d)) {
                    ElementaryBimodule m(d, Composition(gamma), 0);
                    for (const auto& ta : tuples)
                        for (const auto& tc : tuples)
                            for (bool alt_left : {true, false})
                                for (Field f : fields) {
                                    auto dims = invariants_coinvariants_exchange(
                                        m, row_group(ta), alt_left,
                                        column_group(tc), f);
                                    if (dims.invariants_first !=
                                        dims.coinvariants_first) {
                                        std::ostringstream os;
                                        os << "gamma=(" << gamma.to_string()
                                           << ") alt=" << ta.to_string()
                                           << " coinv=" << tc.to_string()
                                           << " alt_left=" << alt_left
                                           << " p=" << f.p << ": "
                                           << dims.invariants_first << " vs "
                                           << dims.coinvariants_first;
                                        return os.str();
                                    }
                                }
                }
            }
            // sampled cases one degree higher
            if (opts.dmax >= 4) {
                int d = 4;
                auto tuples = partition_tuples_of(d);
                auto gammas = partitions_of(d);
                std::uniform_int_distribution<std::size_t> pick_t(
                    0, tuples.size() - 1);
                std::uniform_int_distribution<std::size_t> pick_g(
                    0, gammas.size() - 1);
                for (int i = 0; i < 40; ++i) {
                    const auto& gamma = gammas[pick_g(rng)];
                    const auto& ta = tuples[pick_t(rng)];
                    const auto& tc = tuples[pick_t(rng)];
                    bool alt_left = (i % 2) == 0;
                    Field f = fields[i % fields.size()];
                    ElementaryBimodule m(d, Composition(gamma), 0);
                    auto dims = invariants_coinvariants_exchange(
                        m, row_group(ta), alt_left, column_group(tc), f);
                    if (dims.invariants_first != dims.coinvariants_first)
                        return "sampled d=4 gamma=(" + gamma.to_string() +
                               ") alt=" + ta.to_string() +
                               " coinv=" + tc.to_string();
                }
            }
            return std::string();
        });

        check("sandwich_dim invariant under box renumbering", [&] {
            for (int d = 2; d <= std::min(opts.dmax, 4); ++d) {
                auto tuples = partition_tuples_of(d);
                auto gammas = partitions_of(d);
                std::uniform_int_distribution<std::size_t> pick_t(
                    0, tuples.size() - 1);
                std::uniform_int_distribution<std::size_t> pick_g(
                    0, gammas.size() - 1);
                for (int i = 0; i < 20; ++i) {
                    const auto& gamma = gammas[pick_g(rng)];
                    const auto& tl = tuples[pick_t(rng)];
                    const auto& tr = tuples[pick_t(rng)];
                    Permutation w = random_permutation(d);
                    Field f{i % 2 == 0 ? 2LL : 3LL};
                    ElementaryBimodule m(d, Composition(gamma), 0);
                    int plain = sandwich_dim(m, tl, tr, f, opts.convention);
                    int renumbered = sandwich_dim_groups(
                        m, row_group(tl).conjugated_by(w),
                        row_group(tr).conjugated_by(w),
                        column_group(tl).conjugated_by(w),
                        column_group(tr).conjugated_by(w), f);
                    if (opts.convention == SandwichConvention::standard &&
                        plain != renumbered)
                        return "d=" + std::to_string(d) + " gamma=(" +
                               gamma.to_string() + ") left=" + tl.to_string() +
                               " right=" + tr.to_string();
                }
            }
            return std::string();
        });

        check("left/right action swap (composed with inversion) is invisible", [&] {
            for (int d = 1; d <= std::min(opts.dmax, 3); ++d) {
                auto tuples = partition_tuples_of(d);
                for (const auto& gamma : partitions_of(d)) {
                    ElementaryBimodule m(d, Composition(gamma), 0);
                    for (const auto& tl : tuples)
                        for (const auto& tr : tuples)
                            for (long long p : {2LL, 3LL})
                                if (sandwich_dim(m, tl, tr, Field{p},
                                                 SandwichConvention::standard) !=
                                    sandwich_dim(m, tr, tl, Field{p},
                                                 SandwichConvention::swapped_sides))
                                    return "gamma=(" + gamma.to_string() +
                                           ") left=" + tl.to_string() +
                                           " right=" + tr.to_string() +
                                           " p=" + std::to_string(p);
                }
            }
            return std::string();
        });
    }

    void formulas_suite() {
        check("gamma correction vanishes at t=-1", [&] {
            for (long long p : {2LL, 3LL, 5LL})
                for (int r = 1; r <= opts.rmax; ++r)
                    if (gamma_correction(p, r).euler_characteristic() != 0)
                        return "p=" + std::to_string(p) +
                               " r=" + std::to_string(r);
            return std::string();
        });

        check("gamma series top degree matches the closed formula", [&] {
            for (long long p : {2LL, 3LL})
                for (int r = 1; r <= opts.rmax; ++r) {
                    auto s = gamma_p_series(p, r);
                    auto top = s.top_degree();
                    if (!top || Int(*top) != gamma_top_degree(1, p, r))
                        return "p=" + std::to_string(p) +
                               " r=" + std::to_string(r);
                    if (!s.even_degrees_only())
                        return "odd term at p=" + std::to_string(p);
                }
            return std::string();
        });

        check("Euler characteristic agrees on the S/Gamma pair", [&] {
            const std::pair<long long, int> pairs[] = {
                {2, 1}, {2, 2}, {3, 1}, {5, 1}};
            for (auto [p, r] : pairs) {
                auto rep = euler_duality_check(p, r);
                if (!rep.equal)
                    return "p=" + std::to_string(p) + " r=" + std::to_string(r);
            }
            return std::string();
        });
    }
};

}  // namespace

std::vector<PropertyResult> run_verification(const VerifyOptions& opts) {
    Suite suite(opts);
    suite.combinatorics_suite();
    suite.poincare_suite();
    suite.tensor_suite();
    suite.coinvariants_suite();
    suite.sandwich_suite();
    suite.formulas_suite();
    return suite.results;
}

bool all_passed(const std::vector<PropertyResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

}  // namespace glcoh
