#pragma once

#include <vector>

#include "qpart/bigint.hpp"
#include "qpart/classes.hpp"
#include "qpart/partition.hpp"

namespace qpart {

/* Rectangular table of counts of partitions of n into exactly k parts,
 * filled by the class recurrence. cell(0,0) = 1; cells outside the stored
 * range read as 0. */
class CountTable {
public:
    CountTable(ClassSpec::Kind kind, long long s, long long max_n,
               long long max_k);

    ClassSpec::Kind kind() const { return kind_; }
    long long s() const { return s_; }
    long long max_n() const { return max_n_; }
    long long max_k() const { return max_k_; }

    const BigInt& cell(long long n, long long k) const;
    BigInt& cell_mut(long long n, long long k);

    BigInt row_sum(long long n) const;

private:
    ClassSpec::Kind kind_;
    long long s_;
    long long max_n_;
    long long max_k_;
    std::vector<BigInt> cells_;
    static const BigInt zero_;
};

/* Multiplicity-of-ones recurrence: M_s(n,k) = sum over l = 0,1 (mod s),
 * 0 <= l <= k of M_s(n-k, k-l). */
CountTable modular_table(long long s, long long max_n, long long max_k);

/* Smallest-part dissection over N(s) = {1,3,...,s-1,s} plus the all-parts
 * > s layer. Auxiliary layers are kept for breakdown inspection:
 * layer(l) counts partitions whose smallest part is l, and layer(s+1)
 * counts those with all parts > s. */
class CongruentTable {
public:
    CongruentTable(long long s, long long max_n, long long max_k);

    const CountTable& totals() const { return totals_; }
    const BigInt& cell(long long n, long long k) const {
        return totals_.cell(n, k);
    }
    const BigInt& layer(long long l, long long n, long long k) const;
    long long s() const { return s_; }

private:
    friend CongruentTable congruent_table(long long s, long long max_n,
                                          long long max_k);
    long long index_of(long long l) const;
    long long s_;
    CountTable totals_;
    std::vector<CountTable> layers_;
};

CongruentTable congruent_table(long long s, long long max_n, long long max_k);

/* Partitions into distinct parts <= s/2 - 1, including the empty one;
 * exactly 2^(s/2-1) elements. */
std::vector<Partition> alpha_set(long long s);

/* Durfee-style dissection: D_s(n,k) = D_s(n-s/2, k-1)
 * + sum over alpha of D_s(n - s(k-len(alpha))/2 - |alpha|, k-len(alpha)). */
CountTable duplicate_table(long long s, long long max_n, long long max_k);

/* C_4(n) by the triangular-number recurrence
 * C_4(n) = sum_{k>=1} (-1)^(T_k+1) C_4(n - T_k), C_4(0) = 1. */
std::vector<BigInt> c4_sequence(long long max_n);
BigInt c4_triangular(long long n);

/* Closed recurrence for duplicate partitions of n into two parts:
 * 0,0,0,1,2,2,2 for n = 0..6, then f(n) = f(n-4) + 2. */
BigInt d4_two_parts(long long n);

} // namespace qpart
