#include <doctest.h>

#include <set>

#include "qpart/classes.hpp"
#include "qpart/partition.hpp"
#include "qpart/series.hpp"

using namespace qpart;

TEST_CASE("canonical form aggregates and sorts") {
    Partition p = Partition::from_parts({1, 3, 1, 3, 3, 2});
    REQUIRE(p.entries().size() == 3);
    CHECK(p.entries()[0] == Partition::Entry{3, 3});
    CHECK(p.entries()[1] == Partition::Entry{2, 1});
    CHECK(p.entries()[2] == Partition::Entry{1, 2});
    CHECK(p.weight() == 13);
    CHECK(p.length() == 6);

    Partition merged = Partition::from_entries({{2, 1}, {5, 2}, {2, 3}});
    CHECK(merged.str() == "5^2,2^4");

    CHECK_THROWS_AS(Partition::from_parts({3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_entries({{-1, 2}}), std::invalid_argument);
}

TEST_CASE("literal parsing") {
    CHECK(Partition::parse("3,2,1^5").str() == "3,2,1^5");
    CHECK(Partition::parse(" 5 , 2^2 , 1 ").weight() == 10);
    CHECK(Partition::parse("0").empty());
    CHECK(Partition::parse("").empty());
    CHECK(Partition::parse("1^10") == Partition::from_entries({{1, 10}}));
    CHECK_THROWS_AS(Partition::parse("3,,1"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3^"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("a,b"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3^0"), std::invalid_argument);
}

TEST_CASE("enumeration of n = 4 in lexicographic descending order") {
    std::vector<std::string> seen;
    for_each_partition(4, [&](const Partition& p) { seen.push_back(p.str()); });
    CHECK(seen == std::vector<std::string>{"4", "3,1", "2^2", "2,1^2", "1^4"});
}

TEST_CASE("enumeration basics") {
    CHECK(all_partitions(0).size() == 1);
    CHECK(all_partitions(0)[0].empty());
    CHECK(all_partitions(8).size() == 22);

    /* Strictly decreasing lexicographic order, no duplicates. */
    std::vector<Partition> all = all_partitions(9);
    for (size_t i = 0; i + 1 < all.size(); ++i)
        CHECK(Partition::lex_greater(all[i], all[i + 1]));
    for (const Partition& p : all) CHECK(p.weight() == 9);
}

TEST_CASE("enumeration count matches the inverted pentagonal series") {
    const long long limit = 20;
    TruncatedSeries inverse =
        pochhammer_product({{1, 1, 1, -1}}, limit).invert();
    for (long long n = 0; n <= limit; ++n) {
        BigInt total = 0;
        for_each_partition(n, [&](const Partition&) { ++total; });
        CHECK(total == inverse.coeff(n));
    }
}

TEST_CASE("length-restricted enumeration") {
    std::vector<std::string> seen;
    for_each_partition_with_length(
        4, 2, [&](const Partition& p) { seen.push_back(p.str()); });
    CHECK(seen == std::vector<std::string>{"3,1", "2^2"});

    std::vector<Partition> zero = all_partitions_with_length(0, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());

    CHECK(all_partitions_with_length(3, 0).empty());
    CHECK(all_partitions_with_length(3, 4).empty());

    /* Cross-check against filtering the unrestricted stream. */
    for (long long n = 0; n <= 12; ++n)
        for (long long k = 0; k <= n; ++k) {
            long long direct = 0;
            for_each_partition_with_length(
                n, k, [&](const Partition&) { ++direct; });
            long long filtered = 0;
            for_each_partition(n, [&](const Partition& p) {
                if (p.length() == k) ++filtered;
            });
            CHECK(direct == filtered);
        }

    /* Duplicate-class survivors among partitions of 13 into 3 parts. */
    long long survivors = 0;
    for_each_partition_with_length(13, 3, [&](const Partition& p) {
        if (is_member(p, ClassSpec::duplicate(4))) ++survivors;
    });
    CHECK(survivors == 11);
}
