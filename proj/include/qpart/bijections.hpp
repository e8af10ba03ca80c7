#pragma once

#include <string>
#include <vector>

#include "qpart/partition.hpp"

namespace qpart {

/* m = 2^r * ell with ell odd. */
struct TwoAdicSplit {
    long long r = 0;
    long long ell = 0;
};

TwoAdicSplit two_adic_split(long long m);

/* One per-part rule application, for --trace style output. */
struct TraceStep {
    long long part = 0;
    long long mult = 0;
    std::string rule;
    std::vector<Partition::Entry> image;
};

/* The four weight-preserving maps between the modular, congruent and
 * duplicate classes. Each operates part-wise on (part, multiplicity)
 * pairs and merges the images as a multiset. The power-of-two and general
 * regimes of s use different rule tables and never mix within one call.
 *
 * Throws PreconditionViolated when the input is outside the source class,
 * InternalCaseGap when a pair matches no rule, NoValidChoice when an
 * inverse has no admissible expansion, and PostconditionViolated when a
 * merged image fails its target class check.
 */
Partition to_congruent(const Partition& p, long long s,
                       std::vector<TraceStep>* trace = nullptr);
Partition from_congruent(const Partition& p, long long s,
                         std::vector<TraceStep>* trace = nullptr);
Partition to_duplicate(const Partition& p, long long s,
                       std::vector<TraceStep>* trace = nullptr);
Partition from_duplicate(const Partition& p, long long s,
                         std::vector<TraceStep>* trace = nullptr);

} // namespace qpart
