#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace qpart {

/* Canonical integer partition: list of (part, multiplicity) pairs with
 * parts strictly decreasing and multiplicities >= 1. The empty list is the
 * unique partition of 0. */
class Partition {
public:
    struct Entry {
        long long part = 0;
        long long mult = 0;
        bool operator==(const Entry&) const = default;
    };

    Partition() = default;

    /* Normalizing constructors: sort descending, merge equal parts, drop
     * zero multiplicities. Throw std::invalid_argument on nonpositive
     * parts or negative multiplicities. */
    static Partition from_entries(std::vector<Entry> entries);
    static Partition from_parts(const std::vector<long long>& parts);

    /* Parses the exponent notation "5,2^2,1". Whitespace is ignored.
     * Throws std::invalid_argument on malformed input. */
    static Partition parse(std::string_view text);

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    long long weight() const;
    long long length() const;

    /* Weakly decreasing part list, parts repeated per multiplicity. */
    std::vector<long long> parts_with_repetition() const;

    /* Exponent notation, e.g. "5,2^2,1"; the empty partition prints "0". */
    std::string str() const;

    bool operator==(const Partition&) const = default;

    /* Lexicographic order on the descending part sequence; used only to fix
     * a reproducible enumeration order. */
    static bool lex_greater(const Partition& a, const Partition& b);

private:
    std::vector<Entry> entries_;
};

/* Visits every partition of n exactly once, in lexicographically
 * decreasing part-sequence order: (n) first, (1^n) last. n = 0 visits the
 * empty partition. */
void for_each_partition(long long n,
                        const std::function<void(const Partition&)>& visit);

/* Visits every partition of n with exactly k parts, same order. */
void for_each_partition_with_length(
    long long n, long long k,
    const std::function<void(const Partition&)>& visit);

std::vector<Partition> all_partitions(long long n);
std::vector<Partition> all_partitions_with_length(long long n, long long k);

} // namespace qpart
