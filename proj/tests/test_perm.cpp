#include <doctest.h>

#include <numeric>
#include <set>

#include "glcoh/perm.hpp"
#include "glcoh/sandwich.hpp"

using namespace glcoh;

TEST_CASE("permutation basics") {
    Permutation f({1, 2, 0});  // 0->1->2->0
    Permutation g({1, 0, 2});
    CHECK(f.compose(g) == Permutation({2, 1, 0}));  // f(g(i))
    CHECK(g.compose(f) == Permutation({0, 2, 1}));
    CHECK(f.inverse() == Permutation({2, 0, 1}));
    CHECK(f.compose(f.inverse()).is_identity());
    CHECK(f.sign() == 1);
    CHECK(g.sign() == -1);
    CHECK(f.compose(g).sign() == f.sign() * g.sign());
    CHECK(f.cycle_type() == Partition({3}));
    CHECK(g.cycle_type() == Partition({2, 1}));
    CHECK(Permutation::transposition(4, 1, 3) == Permutation({0, 3, 2, 1}));
    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("lehmer rank round trip") {
    CHECK(factorial(6) == 720);
    for (int d = 1; d <= 6; ++d) {
        CHECK(lehmer_rank(Permutation::identity(d)) == 0);
        for (std::uint64_t s = 0; s < factorial(d); ++s)
            CHECK(lehmer_rank(lehmer_unrank(s, d)) == s);
    }
}

TEST_CASE("young subgroup") {
    YoungSubgroup g = YoungSubgroup::of_shape(Composition({2, 1}), 3);
    CHECK(g.order() == 2);
    CHECK(g.contains(Permutation({1, 0, 2})));
    CHECK_FALSE(g.contains(Permutation({0, 2, 1})));
    CHECK(g.elements().size() == 2);

    // non-consecutive blocks
    YoungSubgroup h = YoungSubgroup::of_blocks({{0, 2}, {1, 3}}, 4);
    CHECK(h.order() == 4);
    CHECK(h.contains(Permutation({2, 1, 0, 3})));
    CHECK_FALSE(h.contains(Permutation({1, 0, 2, 3})));
    CHECK(h.elements().size() == 4);

    // generators generate: closure size equals order
    YoungSubgroup big = YoungSubgroup::of_shape(Composition({3, 2}), 5);
    std::set<std::uint64_t> seen;
    for (const auto& e : big.elements()) seen.insert(lehmer_rank(e));
    CHECK(seen.size() == big.order());
    for (const auto& gen : big.generators()) CHECK(big.contains(gen));

    YoungSubgroup conj = big.conjugated_by(Permutation({4, 3, 2, 1, 0}));
    CHECK(conj.order() == big.order());
    for (const auto& e : big.elements()) {
        Permutation w({4, 3, 2, 1, 0});
        CHECK(conj.contains(w.compose(e).compose(w.inverse())));
    }
}

TEST_CASE("fixed cosets") {
    CHECK(fixed_cosets(Permutation::identity(3),
                       Composition({1, 1, 1})) == 6);
    CHECK(fixed_cosets(Permutation({1, 0}), Composition({2})) == 1);
    CHECK(fixed_cosets(Permutation({1, 0}), Composition({1, 1})) == 0);
    // identity fixes every coset
    CHECK(fixed_cosets(Permutation::identity(4), Composition({2, 2})) == 6);
}

TEST_CASE("centralizer order") {
    CHECK(centralizer_order(Permutation::identity(3)) == 6);
    CHECK(centralizer_order(Permutation({1, 0})) == 2);
    CHECK(centralizer_order(Permutation({1, 2, 0})) == 3);
    CHECK(centralizer_order(Partition({2, 2, 1})) == 8);  // 2^2*2!*1
}

TEST_CASE("young elements by cycle type") {
    for (int d = 1; d <= 5; ++d)
        for (const auto& gamma_p : partitions_of(d)) {
            Composition gamma(gamma_p);
            std::uint64_t total = 0, order = 1;
            for (int part : gamma.parts()) order *= factorial(part);
            for (const auto& t : partitions_of(d))
                total += young_elements_with_cycle_type(gamma, t);
            CHECK(total == order);
        }
    CHECK(young_elements_with_cycle_type(Composition({2, 2}),
                                         Partition({2, 2})) == 1);
    CHECK(young_elements_with_cycle_type(Composition({2, 2}),
                                         Partition({2, 1, 1})) == 2);
}

TEST_CASE("row and column groups of tuples") {
    SkewTuple row2({Partition({2})});
    CHECK(row_group(row2).order() == 2);
    CHECK(column_group(row2).order() == 1);

    SkewTuple col2({Partition({1, 1})});
    CHECK(row_group(col2).order() == 1);
    CHECK(column_group(col2).order() == 2);

    SkewTuple two_blocks({Partition({2}), Partition({1})});
    CHECK(row_group(two_blocks).shape() == Composition({2, 1}));

    SkewTuple hook({Partition({2, 1})});
    YoungSubgroup cols = column_group(hook);
    CHECK(cols.order() == 2);
    CHECK(cols.contains(Permutation({2, 1, 0})));  // swap boxes 0 and 2
}
