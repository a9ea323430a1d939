#include <doctest.h>

#include <stdexcept>

#include "glcoh/shapes.hpp"

using namespace glcoh;

TEST_CASE("partition validation") {
    CHECK(Partition({3, 2, 2}).weight() == 7);
    CHECK(Partition().empty());
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("partitions_of enumeration") {
    auto p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    auto p2 = partitions_of(2);
    REQUIRE(p2.size() == 2);
    CHECK(p2[0] == Partition({2}));
    CHECK(p2[1] == Partition({1, 1}));

    CHECK(partitions_of(4).size() == 5);
    // partition-count recurrence values p(n) for n = 0..10
    const std::size_t counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == counts[n]);
}

TEST_CASE("conjugate") {
    CHECK(Partition({3}).conjugate() == Partition({1, 1, 1}));
    CHECK(Partition({2, 1}).conjugate() == Partition({2, 1}));
    CHECK(Partition({2, 2}).conjugate() == Partition({2, 2}));
    for (int n = 0; n <= 10; ++n)
        for (const auto& lam : partitions_of(n))
            CHECK(lam.conjugate().conjugate() == lam);
}

TEST_CASE("compositions") {
    CHECK(Composition({2, 1, 2}).weight() == 5);
    CHECK(Composition({2, 1, 2}).sorted() == Partition({2, 2, 1}));
    for (int n = 1; n <= 7; ++n)
        CHECK(compositions_of(n).size() == (std::size_t{1} << (n - 1)));
    CHECK_THROWS_AS(Composition({1, 0}), std::invalid_argument);
}

TEST_CASE("skew tuple numbering") {
    SkewTuple t({Partition({2, 1}), Partition({1})});
    CHECK(t.weight() == 4);
    CHECK(t.row_shape() == Composition({2, 1, 1}));
    CHECK(t.to_string() == "2,1|1");

    auto rows = t.row_blocks();
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == std::vector<int>{0, 1});
    CHECK(rows[1] == std::vector<int>{2});
    CHECK(rows[2] == std::vector<int>{3});

    // block (2,1): boxes 0,1 in the first row, 2 below 0
    auto cols = t.column_blocks();
    REQUIRE(cols.size() == 3);
    CHECK(cols[0] == std::vector<int>{0, 2});
    CHECK(cols[1] == std::vector<int>{1});
    CHECK(cols[2] == std::vector<int>{3});

    SkewTuple tc = t.blockwise_conjugate();
    CHECK(tc.blocks()[0] == Partition({2, 1}));
    CHECK(tc.blocks()[1] == Partition({1}));
}

TEST_CASE("partition tuples enumeration") {
    CHECK(partition_tuples_of(1).size() == 1);
    CHECK(partition_tuples_of(2).size() == 3);   // (2), (1,1), (1|1)
    CHECK(partition_tuples_of(3).size() == 8);
    CHECK(partition_tuples_of(4).size() == 22);
    for (const auto& t : partition_tuples_of(4)) CHECK(t.weight() == 4);
}
