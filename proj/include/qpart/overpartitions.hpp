#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qpart/bigint.hpp"
#include "qpart/partition.hpp"

namespace qpart {

/* Overpartition: a partition in which the first occurrence of each part
 * value may be overlined. At most one overlined occurrence per value. */
struct Overpartition {
    struct Entry {
        long long part = 0;
        long long mult = 0;
        bool overlined = false;
        bool operator==(const Entry&) const = default;
    };
    std::vector<Entry> entries; /* parts strictly decreasing */

    long long weight() const;
    std::string str() const; /* overlined parts print with a trailing ~ */
    bool operator==(const Overpartition&) const = default;
};

/* Visits each overpartition of n exactly once: partitions in the usual
 * order, overline subsets in binary counter order. */
void for_each_overpartition(
    long long n, const std::function<void(const Overpartition&)>& visit);

BigInt count_overpartitions(long long n);

} // namespace qpart
