#include <doctest.h>

#include "glcoh/coinvariants.hpp"
#include "glcoh/errors.hpp"
#include "glcoh/formulas.hpp"

using namespace glcoh;

TEST_CASE("gamma correction polynomial") {
    // (t^2 - 1)(1 + t^4) = t^2 + t^6 - 1 - t^4
    auto c = gamma_correction(2, 1);
    CHECK(c.coefficient(0) == -1);
    CHECK(c.coefficient(2) == 1);
    CHECK(c.coefficient(4) == -1);
    CHECK(c.coefficient(6) == 1);
    CHECK(c.top_degree() == 6);

    for (long long p : {2LL, 3LL, 5LL})
        for (int r = 1; r <= 2; ++r) {
            auto corr = gamma_correction(p, r);
            CHECK(corr.euler_characteristic() == 0);
            Int pr = 1;
            for (int i = 0; i < r; ++i) pr *= p;
            CHECK(Int(*corr.top_degree()) == 2 * p - 2 + 2 * p * (pr - 1));
        }
    CHECK_THROWS_AS(gamma_correction(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(gamma_correction(6, 1), std::invalid_argument);
}

TEST_CASE("gamma_p_series worked value") {
    auto g21 = gamma_p_series(2, 1);
    CHECK(g21.sparse() == std::vector<std::pair<int, Int>>{
                              {0, 1}, {2, 3}, {4, 1}, {6, 1}});
    CHECK(g21.euler_characteristic() == 6);
    CHECK(g21.top_degree() == 6);
    CHECK(g21.even_degrees_only());

    auto g31 = gamma_p_series(3, 1);
    CHECK(g31.nonnegative());
    CHECK(g31.even_degrees_only());
    CHECK(Int(*g31.top_degree()) == gamma_top_degree(1, 3, 1));
    CHECK(g31.euler_characteristic() ==
          theorem1_series(Partition({3}), 3, 1).euler_characteristic());

    CHECK_THROWS_AS(gamma_p_series(11, 1), ScaleGuardError);
}

TEST_CASE("gamma top degree formula") {
    CHECK(gamma_top_degree(1, 2, 1) == 6);
    CHECK(gamma_top_degree(1, 3, 1) == 16);
    for (long long p : {2LL, 3LL, 5LL})
        for (int r = 1; r <= 3; ++r) {
            Int pr = 1;
            for (int i = 0; i < r; ++i) pr *= p;
            CHECK(gamma_top_degree(0, p, r) == 2 * pr - 2);
        }
    CHECK(gamma_top_degree(2, 2, 1) == 4 * 2 + 2 * 4 - 2);
    CHECK_THROWS_AS(gamma_top_degree(-1, 2, 1), std::invalid_argument);
}

TEST_CASE("euler duality") {
    for (auto [p, r] : std::vector<std::pair<long long, int>>{
             {2, 1}, {2, 2}, {3, 1}, {5, 1}}) {
        auto rep = euler_duality_check(p, r);
        CHECK(rep.equal);
        CHECK(rep.sym_euler == rep.gamma_euler);
    }
    CHECK(euler_duality_check(2, 1).sym_euler == 6);
}
