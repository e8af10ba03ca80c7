#include "qpart/goldens.hpp"

#include <string_view>

namespace qpart {
namespace goldens {

const char* BijectionTableGolden::expected(const char* modular,
                                           const char* printed) const {
    for (const RowDeviation& d : deviations)
        if (std::string_view(d.modular) == modular &&
            std::string_view(d.printed) == printed)
            return d.verified;
    return printed;
}

long long CountTableGolden::printed(long long n, long long k) const {
    if (n < 1 || n > max_n || k < 1 || k > max_k) return 0;
    const auto& row = values[static_cast<size_t>(n - 1)];
    if (static_cast<size_t>(k - 1) >= row.size()) return 0;
    return row[static_cast<size_t>(k - 1)];
}

long long CountTableGolden::expected(long long n, long long k) const {
    for (const Deviation& d : deviations)
        if (d.n == n && d.k == k) return d.verified;
    return printed(n, k);
}

const CountTableGolden& modular4_table() {
    static const CountTableGolden table{
        ClassSpec::Kind::Modular,
        4,
        20,
        15,
        {
            {1},
            {1},
            {1, 1},
            {1, 1, 0, 1},
            {1, 2, 0, 0, 1},
            {1, 2, 1, 0, 1},
            {1, 3, 1, 0, 1, 1},
            {1, 3, 2, 1, 1, 1, 0, 1},
            {1, 4, 3, 0, 2, 2, 0, 0, 1},
            {1, 4, 4, 1, 2, 2, 1, 0, 1},
            {1, 5, 5, 1, 2, 4, 1, 0, 1, 1},
            {1, 5, 7, 3, 2, 4, 2, 1, 1, 1, 0, 1},
            {1, 6, 8, 3, 3, 6, 3, 0, 2, 2, 0, 0, 1},
            {1, 6, 10, 5, 3, 6, 5, 1, 2, 2, 1, 0, 1},
            {1, 7, 12, 6, 4, 9, 6, 1, 2, 4, 1, 0, 1, 1},
            {1, 7, 14, 10, 4, 9, 9, 0, 2, 4, 2, 1, 1, 1},
            {1, 8, 16, 11, 5, 13, 11, 3, 4, 8, 1, 0, 2, 2},
            {1, 8, 19, 15, 7, 12, 15, 6, 4, 6, 5, 1, 2, 2, 1},
            {1, 9, 21, 18, 9, 16, 18, 7, 5, 10, 6, 1, 2, 4, 1},
            {1, 9, 24, 24, 11, 16, 23, 13, 5, 10, 9, 4, 2, 4, 2},
        },
        /* Corrupt printed cells; verified values agree across exhaustive
         * enumeration, the recurrence and the generating function. */
        {
            {16, 8, 0, 4},
            {17, 5, 5, 6},
            {17, 6, 13, 12},
            {17, 10, 8, 6},
            {17, 11, 1, 3},
        },
    };
    return table;
}

const CountTableGolden& congruent4_table() {
    static const CountTableGolden table{
        ClassSpec::Kind::Congruent,
        4,
        20,
        15,
        {
            {1},
            {0, 1},
            {1, 0, 1},
            {1, 1, 0, 1},
            {1, 1, 1, 0, 1},
            {0, 2, 1, 1, 0, 1},
            {1, 1, 2, 1, 1, 0, 1},
            {1, 3, 1, 2, 1, 1, 0, 1},
            {1, 2, 4, 1, 2, 1, 1, 0, 1},
            {0, 3, 3, 4, 1, 2, 1, 1, 0, 1},
            {1, 2, 5, 3, 4, 1, 2, 1, 1, 0, 1},
            {1, 4, 4, 6, 3, 4, 1, 2, 1, 1, 0, 1},
            {1, 3, 7, 5, 6, 3, 4, 1, 2, 1, 1, 0, 1},
            {0, 4, 6, 9, 5, 6, 3, 4, 1, 2, 1, 1, 0, 1},
            {1, 3, 9, 8, 10, 5, 6, 3, 4, 2, 2, 1, 1, 0, 1},
            {1, 6, 7, 13, 9, 10, 5, 6, 3, 4, 1, 2, 1, 1, 0},
            {1, 4, 12, 11, 15, 9, 10, 5, 6, 3, 4, 1, 2, 1, 1},
            {0, 5, 10, 18, 13, 16, 9, 10, 5, 6, 3, 4, 1, 2, 1},
            {1, 4, 14, 16, 22, 14, 16, 9, 10, 5, 6, 3, 4, 1, 2},
            {1, 7, 12, 23, 21, 24, 14, 16, 9, 10, 5, 6, 3, 4, 1},
        },
        {
            {15, 10, 2, 1},
        },
    };
    return table;
}

const CountTableGolden& duplicate4_table() {
    static const CountTableGolden table{
        ClassSpec::Kind::Duplicate,
        4,
        14,
        7,
        {
            {1},
            {1},
            {1, 1},
            {1, 2},
            {1, 2, 1},
            {1, 2, 2},
            {1, 3, 2, 1},
            {1, 4, 3, 2},
            {1, 4, 5, 2, 1},
            {1, 4, 6, 3, 2},
            {1, 5, 7, 5, 2, 1},
            {1, 6, 9, 7, 3, 2},
            {1, 6, 11, 9, 5, 2, 1},
            {1, 6, 13, 11, 7, 3, 2},
        },
        {},
    };
    return table;
}

const std::vector<long long>& congruent4_values() {
    static const std::vector<long long> values{
        1,  1,  1,  2,  3,   4,   5,   7,   10,  13,  16,  21, 28,
        35, 43, 55, 70, 86, 105, 130, 161, 196, 236, 287, 350};
    return values;
}

const std::vector<BijectionTableGolden>& bijection_tables() {
    static const std::vector<BijectionTableGolden> tables{
        {4,
         10,
         {
             {"10", "10", "5^2"},
             {"8,2", "8,2", "8,1^2"},
             {"7,2,1", "7,2,1", "7,1^3"},
             {"6,4", "6,4", "4,3^2"},
             {"6,3,1", "6,3,1", "3^3,1"},
             {"5,1^5", "5,2^2,1", "5,1^5"},
             {"4,3,2,1", "4,3,2,1", "4,3,1^3"},
             {"6,1^4", "6,2^2", "3^2,1^4"},
             {"4,2,1^4", "4,2^3", "4,1^6"},
             {"3,2,1^5", "3,2^3,1", "3,1^7"},
             {"2,1^8", "4^2,2", "1^10"},
             {"2^5", "2^5", "4^2,1^2"},
             {"5,1^5", "5,2^2,1", "5,1^5"},
             {"9,1", "9,1", "9,1"},
             {"5,4,1", "5,4,1", "5,4,1"},
             {"7,3", "7,3", "7,3"},
         },
         {}},
        {8,
         18,
         {
             {"9,1^9", "9,4^2,1", "9,1^9"},
             {"2^9", "4^4,2", "8^2,1^2"},
             {"8,2,1^8", "8,4^2,2", "8,1^10"},
             {"7,3,1^8", "7,4^2,3", "7,3,1^8"},
             {"7,2,1^9", "7,4^2,2,1", "7,1^11"},
             {"10,1^8", "10,4^2", "5^2,1^8"},
             {"5,3,2,1^8", "5,4^2,3,2", "5,3,1^10"},
             {"5,4,1^9", "5,4^3,1", "5,1^13"},
             {"6,3,1^9", "6,4^2,3,1", "3^3,1^9"},
             {"6,4,1^8", "6,4^3", "3^2,1^12"},
             {"4,3,2,1^9", "4^3,3,2,1", "3,1^15"},
             {"2,1^16", "8^2,2", "1^18"},
         },
         {}},
        {6,
         18,
         {
             {"12,1^6", "12,3^2", "12,3^2"},
             {"10,2,1^6", "10,3^2,2", "5^2,3^2,1^2"},
             {"9,3,1^6", "9,3^3", "9,3^3"},
             {"8,4,1^6", "8,4,3^2", "3^2,1^12"},
             {"5,4,3,1^6", "5,4,3^3", "5,3^3,1^4"},
             {"11,1^7", "11,3^2,1", "11,3^2,1"},
             {"8,3,1^7", "8,3^3,1", "3^3,1^9"},
             {"5,4,2,1^7", "5,4,3^2,2,1", "5,3^2,1^7"},
             {"6,1^12", "6,3^4", "6,3^4"},
             {"5,1^13", "5,3^4,1", "5,3^4,1"},
             {"4,2,1^12", "4,3^4,2,1", "3^4,1^6"},
             {"1^18", "3^6", "3^6"},
             {"6,2^6", "6^3", "6^3"},
             {"5,2^6,1", "6^2,5,1", "6^2,5,1"},
             {"4,2^7", "6^2,4,2", "6^2,1^6"},
             {"3,2^7,1", "6^2,3,2,1", "6^2,3,1^3"},
             {"3^6", "9^2", "9^2"},
             {"16,2", "16,2", "1^18"},
             {"14,4", "14,4", "7^2,1^4"},
         },
         /* Printed duplicate image weighs 19 in a weight-18 table. */
         {
             {"4,2,1^12", "4,3^4,2,1", "4,3^4,2"},
         }},
        {10,
         15,
         {
             {"14,1", "14,1", "7^2,1"},
             {"12,3", "12,3", "3^5"},
             {"12,2,1", "12,2,1", "3^4,1^3"},
             {"8,6,1", "8,6,1", "3^2,1^9"},
             {"8,5,2", "8,5,2", "5,1^10"},
             {"8,4,2,1", "8,4,2,1", "1^15"},
             {"7,6,2", "7,6,2", "7,3^2,1^2"},
             {"6,5,4", "6,5,4", "5,3^2,1^4"},
             {"6,5,3,1", "6,5,3,1", "5,3^3,1"},
             {"6,4,3,2", "6,4,3,2", "3^3,1^6"},
             {"3,2,1^10", "5^2,3,2", "5^2,3,1^2"},
             {"4,1^11", "5^2,4,1", "5^2,1^5"},
             {"5,4,3,2,1", "5,4,3,2,1", "5,3,1^7"},
             {"7,4,3,1", "7,4,3,1", "7,3,1^5"},
         },
         {}},
    };
    return tables;
}

const AndrewsColumnsGolden& andrews_columns_n12_t3() {
    static const AndrewsColumnsGolden columns{
        {"12", "11,1", "8,4", "8,3,1", "7,5", "7,4,1", "7,3,1^2", "5^2,1^2",
         "5,4,3", "5,3^2,1", "9,3", "4,3^2,1^2", "4^2,3,1"},
        {"1^12", "11,1", "8,4", "8,1^4", "7,5", "7,4,1", "7,1^5", "5^2,1^2",
         "5,4,1^3", "5,1^7", "4^3", "4,1^8", "4^2,1^4"},
        {"12", "11,1", "8,4", "8,3,1", "7,5", "7,4,1", "7,3,2", "10,2",
         "5,4,3", "6,5,1", "9,3", "6,4,2", "6^2"},
    };
    return columns;
}

} // namespace goldens
} // namespace qpart
