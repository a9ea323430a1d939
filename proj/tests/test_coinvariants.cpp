#include <doctest.h>

#include "glcoh/bimodule.hpp"
#include "glcoh/coinvariants.hpp"
#include "glcoh/errors.hpp"

using namespace glcoh;

TEST_CASE("orbit_count worked examples") {
    CHECK(orbit_count(Composition({2}), Composition({2})) == 2);
    CHECK(orbit_count(Composition({1, 1}), Composition({2})) == 2);
    CHECK(orbit_count(Composition({3}), Composition({3})) == 3);
    // trivial acting group: every basis vector is an orbit
    for (int d = 1; d <= 4; ++d) {
        std::vector<int> ones(d, 1);
        for (const auto& gamma_p : partitions_of(d)) {
            Composition gamma(gamma_p);
            CHECK(Int(orbit_count(gamma, Composition(ones))) ==
                  bimodule_dimension(d, gamma));
        }
    }
    CHECK_THROWS_AS(orbit_count(Composition({2}), Composition({3})),
                    std::invalid_argument);
}

TEST_CASE("naive oracle agrees") {
    CHECK(naive_orbit_count(Composition({2}), Composition({2})) == 2);
    CHECK(naive_orbit_count(Composition({1, 1}), Composition({1, 1})) == 4);
    CHECK(naive_orbit_count(Composition({3}), Composition({3})) == 3);
    for (int d = 1; d <= 4; ++d)
        for (const auto& g : compositions_of(d))
            for (const auto& mu : compositions_of(d))
                CHECK(orbit_count(g, mu) == naive_orbit_count(g, mu));
    CHECK_THROWS_AS(
        naive_orbit_count(Composition({7}), Composition({7})),
        std::domain_error);
}

TEST_CASE("theorem1 worked series") {
    // mu=(1): the d=1 case is Ext*(I^{(r)}, I^{(r)})
    for (long long p : {2LL, 3LL, 5LL})
        for (int r = 0; r <= 2; ++r)
            CHECK(theorem1_series(Partition({1}), p, r) == e_r_series(p, r));

    auto s21 = theorem1_series(Partition({2}), 2, 1);
    CHECK(s21.sparse() ==
          std::vector<std::pair<int, Int>>{{0, 2}, {2, 2}, {4, 2}});

    auto s31 = theorem1_series(Partition({2}), 3, 1);
    CHECK(s31.sparse() == std::vector<std::pair<int, Int>>{
                              {0, 2}, {2, 2}, {4, 4}, {6, 2}, {8, 2}});

    // trivial subgroup: equals the total series of the tensor model
    CHECK(theorem1_series(Partition({1, 1}), 2, 1) ==
          total_series(build_tensor_cohomology(2, 2, 1)));

    CHECK_THROWS_AS(theorem1_series(Partition({2}), 4, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(theorem1_series(Partition({2}), 2, 45), ScaleGuardError);
}

TEST_CASE("theorem1 composition reordering") {
    CHECK(theorem1_series(Composition({1, 2}), 2, 1) ==
          theorem1_series(Composition({2, 1}), 2, 1));
    CHECK(theorem1_series(Composition({1, 2, 1}), 3, 1) ==
          theorem1_series(Composition({2, 1, 1}), 3, 1));
}
