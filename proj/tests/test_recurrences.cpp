#include <doctest.h>

#include "qpart/classes.hpp"
#include "qpart/genfun.hpp"
#include "qpart/recurrences.hpp"

using namespace qpart;

TEST_CASE("modular table reproduces the worked breakdown") {
    CountTable table = modular_table(4, 20, 15);
    CHECK(table.cell(1, 1) == 1);
    CHECK(table.cell(12, 3) == 7);
    CHECK(table.cell(12, 8) == 1);
    CHECK(table.cell(12, 7) == 2);
    CHECK(table.cell(12, 4) == 3);
    CHECK(table.cell(20, 8) ==
          table.cell(12, 8) + table.cell(12, 7) + table.cell(12, 4) +
              table.cell(12, 3));
    CHECK(table.cell(20, 8) == 13);
}

TEST_CASE("congruent table layers match the worked dissection") {
    CongruentTable table = congruent_table(4, 24, 24);
    CHECK(table.cell(5, 5) == 1);
    CHECK(table.cell(19, 3) == 14);
    CHECK(table.cell(17, 3) == 12);
    CHECK(table.cell(16, 2) == 6);
    CHECK(table.cell(16, 3) == 7);
    CHECK(table.cell(15, 2) == 3);
    CHECK(table.cell(13, 2) == 3);
    CHECK(table.cell(12, 1) == 1);
    CHECK(table.layer(1, 20, 4) == 14);
    CHECK(table.layer(3, 20, 4) == 6);
    CHECK(table.layer(4, 20, 4) == 2);
    CHECK(table.layer(5, 20, 4) == 1);
    CHECK(table.cell(20, 4) == 23);
}

TEST_CASE("duplicate table matches the worked dissection") {
    CountTable table = duplicate_table(4, 20, 20);
    CHECK(table.cell(11, 2) == 5);
    CHECK(table.cell(7, 3) == 2);
    CHECK(table.cell(8, 2) == 4);
    CHECK(table.cell(13, 3) == 11);
    CHECK(table.cell(14, 3) == 13);
}

TEST_CASE("tables agree with exhaustive counting") {
    for (long long s : {4, 6, 8}) {
        const long long limit = 24;
        CountTable m = modular_table(s, limit, limit);
        CongruentTable c = congruent_table(s, limit, limit);
        CountTable d = duplicate_table(s, limit, limit);
        ClassSpec modular = ClassSpec::modular(s);
        ClassSpec congruent = ClassSpec::congruent(s);
        ClassSpec duplicate = ClassSpec::duplicate(s);
        for (long long n = 0; n <= limit; ++n) {
            for (long long k = 0; k <= n; ++k) {
                CAPTURE(s);
                CAPTURE(n);
                CAPTURE(k);
                CHECK(m.cell(n, k) == count_with_length(n, k, modular));
                CHECK(c.cell(n, k) == count_with_length(n, k, congruent));
                CHECK(d.cell(n, k) == count_with_length(n, k, duplicate));
            }
            CHECK(m.row_sum(n) == count(n, modular));
            CHECK(c.totals().row_sum(n) == count(n, congruent));
            CHECK(d.row_sum(n) == count(n, duplicate));
        }
    }
}

TEST_CASE("smallest-part layers sum to the totals") {
    for (long long s : {4, 6}) {
        CongruentTable table = congruent_table(s, 18, 18);
        for (long long n = 1; n <= 18; ++n)
            for (long long k = 1; k <= n; ++k) {
                BigInt layered = 0;
                for (long long l = 1; l <= s - 1; l += 2)
                    layered += table.layer(l, n, k);
                layered += table.layer(s, n, k);
                layered += table.layer(s + 1, n, k);
                CHECK(layered == table.cell(n, k));
            }
    }
}

TEST_CASE("table boundary conventions") {
    CountTable table = modular_table(4, 10, 10);
    CHECK(table.cell(0, 0) == 1);
    for (long long n = 1; n <= 10; ++n) CHECK(table.cell(n, 0) == 0);
    for (long long k = 1; k <= 10; ++k) CHECK(table.cell(0, k) == 0);
    for (long long n = 0; n <= 10; ++n)
        for (long long k = n + 1; k <= 10; ++k) CHECK(table.cell(n, k) == 0);
    CHECK(table.cell(-1, 2) == 0);
    CHECK(table.cell(2, -1) == 0);
}

TEST_CASE("distinct-small-part sets") {
    CHECK(alpha_set(4).size() == 2);
    CHECK(alpha_set(6).size() == 4);
    CHECK(alpha_set(8).size() == 8);
    CHECK(alpha_set(10).size() == 16);

    auto a4 = alpha_set(4);
    bool has_empty = false, has_one = false;
    for (const Partition& p : a4) {
        if (p.empty()) has_empty = true;
        if (p == Partition::parse("1")) has_one = true;
    }
    CHECK(has_empty);
    CHECK(has_one);

    for (const Partition& p : alpha_set(8)) {
        for (const auto& e : p.entries()) {
            CHECK(e.part <= 3);
            CHECK(e.mult == 1);
        }
        CHECK(p.length() <= 3);
    }
}

TEST_CASE("general duplicate recurrence beats the printed expanded form") {
    /* The expanded form for s = 8 prints its first term with n - 4k in
     * place of n - 4; at (n,k) = (8,2) that yields 3 while enumeration and
     * the general recurrence both give 4. */
    CountTable d8 = duplicate_table(8, 20, 20);
    CHECK(d8.cell(8, 2) == 4);
    CHECK(count_with_length(8, 2, ClassSpec::duplicate(8)) == 4);
    BigInt alpha_terms = d8.cell(8, 2) - d8.cell(8 - 4, 2 - 1);
    BigInt literal_first_term = d8.cell(8 - 4 * 2, 2 - 1);
    CHECK(alpha_terms + literal_first_term == 3);
}

TEST_CASE("triangular recurrence for the 4-congruent counts") {
    std::vector<BigInt> seq = c4_sequence(200);
    CHECK(seq[0] == 1);
    CHECK(seq[21] == 196);
    CHECK(seq[24] == 350);
    CHECK(seq[21] ==
          seq[20] + seq[18] - seq[15] - seq[11] + seq[6] + seq[0]);
    CHECK(seq[24] ==
          seq[23] + seq[21] - seq[18] - seq[14] + seq[9] + seq[3]);

    TruncatedSeries gf = class_genfun(ClassSpec::congruent(4), 200);
    for (long long n = 0; n <= 200; ++n)
        CHECK(seq[static_cast<size_t>(n)] == gf.coeff(n));

    CHECK(c4_triangular(21) == 196);
    CHECK(c4_triangular(-3) == 0);
}

TEST_CASE("closed two-part recurrence") {
    CHECK(d4_two_parts(0) == 0);
    CHECK(d4_two_parts(2) == 0);
    CHECK(d4_two_parts(3) == 1);
    CHECK(d4_two_parts(4) == 2);
    CHECK(d4_two_parts(5) == 2);
    CHECK(d4_two_parts(6) == 2);
    CHECK(d4_two_parts(7) == 3);
    CHECK(d4_two_parts(8) == 4);
    for (long long n = 7; n <= 100; ++n)
        CHECK(d4_two_parts(n) == d4_two_parts(n - 4) + 2);

    CountTable d4 = duplicate_table(4, 100, 2);
    TruncatedSeries gf = class_genfun(ClassSpec::two_part_duplicate4(), 100);
    for (long long n = 0; n <= 100; ++n) {
        CHECK(d4_two_parts(n) == d4.cell(n, 2));
        CHECK(d4_two_parts(n) == gf.coeff(n));
    }
}
