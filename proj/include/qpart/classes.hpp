#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qpart/bigint.hpp"
#include "qpart/partition.hpp"

namespace qpart {

/* Tagged description of a partition class. Here and throughout, s is an
 * even integer >= 4.
 *
 *   modular(s)             multiplicities all == 0 or 1 (mod s)
 *   congruent(s)           no part == 2,4,...,s-2 (mod s)
 *   duplicate(s)           repeated parts all == 0 (mod s/2)
 *   congruent_distinct(s,t) congruent(s), multiplicities < t
 *   e_class(s,t)           no part == 2,4,...,s-2 (mod s) and
 *                          no part == 0 or t(2r+1) (mod ts), r = 0..s/2-1
 *   v_class(k,i)           no part == 2 (mod 4), none == 0, +-(2i-1) (mod 4k)
 *   w_class(k,i)           no odd part repeated; writing the parts weakly
 *                          decreasing, part_j - part_{j+k-1} >= 2 when
 *                          part_j is odd and > 2 when even, whenever the
 *                          index exists; at most i-1 parts are <= 2
 *   pod                    odd parts distinct (= duplicate(4))
 *   ped                    even parts distinct
 *   two_part_duplicate4    duplicate(4) with exactly two parts
 */
class ClassSpec {
public:
    enum class Kind {
        Modular,
        Congruent,
        Duplicate,
        CongruentDistinct,
        EClass,
        VClass,
        WClass,
        Pod,
        Ped,
        Unrestricted,
        TwoPartDuplicate4,
    };

    static ClassSpec modular(long long s);
    static ClassSpec congruent(long long s);
    static ClassSpec duplicate(long long s);
    static ClassSpec congruent_distinct(long long s, long long t);
    static ClassSpec e_class(long long s, long long t);
    static ClassSpec v_class(long long k, long long i);
    static ClassSpec w_class(long long k, long long i);
    static ClassSpec pod();
    static ClassSpec ped();
    static ClassSpec unrestricted();
    static ClassSpec two_part_duplicate4();

    Kind kind() const { return kind_; }
    long long s() const { return s_; }
    long long t() const { return t_; }
    long long k() const { return k_; }
    long long i() const { return i_; }

    std::string name() const;

private:
    ClassSpec(Kind kind, long long s, long long t, long long k, long long i)
        : kind_(kind), s_(s), t_(t), k_(k), i_(i) {}

    Kind kind_;
    long long s_ = 0;
    long long t_ = 0;
    long long k_ = 0;
    long long i_ = 0;
};

bool is_member(const Partition& p, const ClassSpec& c);

/* Exhaustive count of partitions of n in the class. n < 0 counts as 0. */
BigInt count(long long n, const ClassSpec& c);

/* Same restricted to partitions with exactly k parts. */
BigInt count_with_length(long long n, long long k, const ClassSpec& c);

/* For each s-duplicate partition of n, keyed by (r, l) where r is the
 * total number of parts and l the number of parts not divisible by s/2. */
std::map<std::pair<long long, long long>, BigInt>
refined_duplicate_counts(long long n, long long s);

/* Two weight polynomials in a marker c, as coefficient vectors:
 * first, sum of c^length over partitions of n into distinct parts; second,
 * sum of c^length (1+c)^g over partitions with gaps >= 3, where g counts
 * indices with part_i - part_{i+1} > 3, sentinel part_{k+1} = -1. The two
 * polynomials are equal. */
std::pair<std::vector<BigInt>, std::vector<BigInt>>
sylvester_weight_polynomials(long long n);

} // namespace qpart
