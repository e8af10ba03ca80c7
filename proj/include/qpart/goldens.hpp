#pragma once

#include <vector>

#include "qpart/classes.hpp"

namespace qpart {
namespace goldens {

/* Published reference tables, embedded exactly as printed (blank cells
 * read as 0). A handful of printed cells are corrupt in the source text;
 * those carry a deviation record with the value verified independently by
 * enumeration, recurrence and generating function. Comparisons must match
 * the printed value everywhere except the recorded deviations, where they
 * must match the verified value instead. */
struct Deviation {
    long long n = 0;
    long long k = 0;
    long long printed = 0;
    long long verified = 0;
};

struct CountTableGolden {
    ClassSpec::Kind kind;
    long long s;
    long long max_n;
    long long max_k;
    /* values[n-1][k-1], rows padded with zeros to max_k */
    std::vector<std::vector<long long>> values;
    std::vector<Deviation> deviations;

    long long printed(long long n, long long k) const;
    /* printed value, or the verified one at a recorded deviation */
    long long expected(long long n, long long k) const;
};

const CountTableGolden& modular4_table();   /* n <= 20, k <= 15 */
const CountTableGolden& congruent4_table(); /* n <= 20, k <= 15 */
const CountTableGolden& duplicate4_table(); /* n <= 14, k <= 7  */

/* First 25 values of the 4-congruent counting sequence. */
const std::vector<long long>& congruent4_values();

/* Rows of the published bijection correspondences: each row lists the
 * modular partition with its duplicate and congruent images. */
struct BijectionRow {
    const char* modular;
    const char* duplicate;
    const char* congruent;
};

/* One printed image cell whose weight is inconsistent with the table's n;
 * the verified literal is the image recomputed from the map and checked
 * for weight and class membership. */
struct RowDeviation {
    const char* modular;
    const char* printed;
    const char* verified;
};

struct BijectionTableGolden {
    long long s;
    long long n;
    std::vector<BijectionRow> rows;
    std::vector<RowDeviation> deviations;

    /* The printed duplicate/congruent image, or its verified correction. */
    const char* expected(const char* modular, const char* printed) const;
};

const std::vector<BijectionTableGolden>& bijection_tables();

/* The three columns listing the 13 partitions of 12 for the t = 3
 * correspondence between the congruent-distinct, residue and
 * difference-condition classes. */
struct AndrewsColumnsGolden {
    std::vector<const char*> congruent_distinct;
    std::vector<const char*> v_class;
    std::vector<const char*> w_class;
};

const AndrewsColumnsGolden& andrews_columns_n12_t3();

} // namespace goldens
} // namespace qpart
