#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "grassdual/errors.hpp"
#include "grassdual/partitions.hpp"

using namespace grassdual;

TEST_CASE("shape validation") {
    CHECK_THROWS_AS(GrassmannShape(0, 4), ShapeError);
    CHECK_THROWS_AS(GrassmannShape(4, 4), ShapeError);
    CHECK_THROWS_AS(GrassmannShape(5, 4), ShapeError);
    GrassmannShape s(3, 5);
    CHECK(s.rows() == 2);
    CHECK(s.cols() == 3);
    CHECK(s.boxes() == 6);
}

TEST_CASE("partition basics") {
    CHECK_THROWS_AS(Partition({1, 2}), CombinatoricsError);
    CHECK_THROWS_AS(Partition({2, -1}), CombinatoricsError);
    CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
    CHECK(Partition{}.empty());
    CHECK(Partition::rectangle(2, 3) == Partition({3, 3}));
    CHECK(Partition::rectangle(0, 3).empty());
    CHECK(Partition::rectangle(2, 0).empty());
    CHECK(Partition({3, 1}).size() == 4);
    CHECK(Partition({3, 1}).part(0) == 3);
    CHECK(Partition({3, 1}).part(5) == 0);

    GrassmannShape s(3, 5);
    CHECK(Partition({3, 3}).fits(s));
    CHECK_FALSE(Partition({4}).fits(s));
    CHECK_FALSE(Partition({1, 1, 1}).fits(s));

    CHECK(Partition({3, 1}).covers(Partition({3})));
    CHECK(Partition({1}).covers(Partition{}));
    CHECK_FALSE(Partition({3, 1}).covers(Partition({1, 1})));
    CHECK_FALSE(Partition({3}).covers(Partition({3})));

    CHECK(Partition({3, 1}).to_string() == "3,1");
    CHECK(Partition{}.to_string() == "");
    CHECK(Partition::parse("3,1") == Partition({3, 1}));
    CHECK(Partition::parse("") == Partition{});
    CHECK_THROWS_AS(Partition::parse("1,3"), Error);
}

TEST_CASE("index subsets") {
    CHECK_THROWS_AS(IndexSubset({2, 2}), CombinatoricsError);
    CHECK_THROWS_AS(IndexSubset({3, 1}), CombinatoricsError);
    CHECK_THROWS_AS(IndexSubset({0, 1}), CombinatoricsError);
    IndexSubset s({2, 4});
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(3));
    CHECK(s.complement(5) == IndexSubset({1, 3, 5}));
    CHECK(s.to_string() == "{2,4}");
}

TEST_CASE("border path bijection on the 2 x 3 rectangle") {
    GrassmannShape s(3, 5);
    CHECK(south_subset(s, Partition{}) == IndexSubset({4, 5}));
    CHECK(south_subset(s, Partition({3, 3})) == IndexSubset({1, 2}));
    CHECK(south_subset(s, Partition({1})) == IndexSubset({3, 5}));
    CHECK(south_subset(s, Partition({2})) == IndexSubset({2, 5}));
    CHECK(south_subset(s, Partition({3})) == IndexSubset({1, 5}));
    CHECK(south_subset(s, Partition({1, 1})) == IndexSubset({3, 4}));
    CHECK(south_subset(s, Partition({2, 2})) == IndexSubset({2, 3}));
    CHECK(west_subset(s, Partition({3, 3})) == IndexSubset({3, 4, 5}));
    CHECK(west_subset(s, Partition{}) == IndexSubset({1, 2, 3}));
}

TEST_CASE("border path bijection round-trips") {
    for (auto [k, n] : {std::pair{2, 4}, {3, 5}, {2, 5}, {3, 6}, {4, 7}}) {
        GrassmannShape s(k, n);
        auto parts = all_partitions(s);
        std::set<IndexSubset> seen;
        for (const auto& p : parts) {
            IndexSubset sou = south_subset(s, p);
            CHECK(sou.size() == static_cast<std::size_t>(s.rows()));
            CHECK(partition_from_south(s, sou) == p);
            IndexSubset wes = west_subset(s, p);
            CHECK(wes == sou.complement(n));
            CHECK(partition_from_west(s, wes) == p);
            seen.insert(sou);
        }
        CHECK(seen.size() == parts.size());
        CHECK(parts.size() == all_subsets(n, s.rows()).size());
    }
}

TEST_CASE("subset enumeration and cyclic intervals") {
    CHECK(all_subsets(4, 2).size() == 6);
    CHECK(all_subsets(4, 2).front() == IndexSubset({1, 2}));
    CHECK(all_subsets(4, 2).back() == IndexSubset({3, 4}));
    CHECK(cyclic_interval(5, 2, 3) == IndexSubset({2, 3, 4}));
    CHECK(cyclic_interval(5, 4, 3) == IndexSubset({1, 4, 5}));
    CHECK(cyclic_interval(5, 6, 2) == IndexSubset({1, 2}));
}

TEST_CASE("standard trip permutation") {
    CHECK(standard_trip_permutation(GrassmannShape(3, 5)) == std::vector<int>{3, 4, 5, 1, 2});
    CHECK(standard_trip_permutation(GrassmannShape(2, 4)) == std::vector<int>{3, 4, 1, 2});
}

TEST_CASE("boundary face labels of the grid graph") {
    GrassmannShape s(3, 5);
    auto mu = frozen_labels(s);
    REQUIRE(mu.size() == 5);
    CHECK(mu[0] == Partition({3}));
    CHECK(mu[1] == Partition({3, 3}));
    CHECK(mu[2] == Partition({2, 2}));
    CHECK(mu[3] == Partition({1, 1}));
    CHECK(mu[4] == Partition{});

    CHECK(frozen_label_plus(s, 1) == Partition({3, 1}));
    CHECK(frozen_label_plus(s, 2) == Partition({2}));
    CHECK(frozen_label_plus(s, 3) == Partition({3, 2}));
    CHECK(frozen_label_plus(s, 4) == Partition({2, 1}));
    CHECK(frozen_label_plus(s, 5) == Partition({1}));
}

TEST_CASE("frozen partner label adds one box away from the corner") {
    for (auto [k, n] : {std::pair{2, 4}, {3, 5}, {2, 5}, {3, 6}}) {
        GrassmannShape s(k, n);
        auto mu = frozen_labels(s);
        for (int i = 1; i <= n; ++i) {
            Partition plus = frozen_label_plus(s, i);
            if (i == s.rows()) {
                CHECK(plus == Partition::rectangle(s.rows() - 1, s.cols() - 1));
            } else {
                CHECK(plus.covers(mu[static_cast<std::size_t>(i - 1)]));
            }
        }
    }
}

TEST_CASE("section dimension oracle") {
    GrassmannShape s24(2, 4);
    CHECK(ssyt_count(s24, 1) == 6);
    CHECK(ssyt_count(s24, 2) == 20);
    CHECK(ssyt_count(s24, 3) == 50);
    CHECK(ssyt_count(GrassmannShape(3, 5), 1) == 10);
    CHECK(ssyt_count(GrassmannShape(2, 5), 1) == 10);
    CHECK(ssyt_count(GrassmannShape(3, 6), 2) == 175);
}
