#pragma once

#include <utility>

#include "qpart/series.hpp"
#include "qpart/weighted.hpp"

namespace qpart {

/* Refined generating function for s-duplicate partitions with markers
 * (z, b): z tracks the total number of parts and b the parts not divisible
 * by s/2. The product form is
 *   prod_{n>=1} (1 + z b q^n) / ((1 + z b q^{sn/2})(1 - z q^{sn/2})). */
WeightedSeries duplicate_refined_lhs(long long s, long long order);

/* The Durfee-square expansion of the same series. The displayed form
 * carries k-indexed Pochhammer denominators with the bracket factor
 * (1 - z q^{sk/2})(1 - q^{sk/2}) on the short-entry sum; the case-by-case
 * derivation writes those cases over (k-1)-indexed denominators instead.
 * Both are provided; they agree identically. */
enum class RhsDenominators { Displayed, CaseByCase };

/* summands = 0 picks the least K whose k-th term starts beyond the order. */
WeightedSeries duplicate_refined_rhs(
    long long s, long long order,
    RhsDenominators variant = RhsDenominators::Displayed,
    long long summands = 0);

/* Both sides of the odd/even refined expansion with markers (b, c):
 * LHS = (-bq;q^2)_inf / (cq^2;q^2)_inf, b tracking odd parts and c even
 * parts; RHS is its Durfee-square expansion, with the k-th numerator block
 * expanded as (c+bq)(c+bq^3)...(c+bq^{2k-3})(b+cq) so only nonnegative
 * marker powers appear. */
std::pair<WeightedSeries, WeightedSeries> alladi_sides(long long order);

/* Reindexes a (z, b) refined series to the (b, c) markers: a partition
 * with r parts of which l are off-lattice carries z^r b^l on one side and
 * b^l c^{r-l} on the other. */
WeightedSeries alladi_reindex(const WeightedSeries& zb_series);

/* Classical two-sided identities, exact to the truncation order. */
std::pair<TruncatedSeries, TruncatedSeries> gauss_sides(long long order);
std::pair<WeightedSeries, WeightedSeries> lebesgue_sides(long long order);
std::pair<WeightedSeries, WeightedSeries> sylvester_sides(long long order);
std::pair<TruncatedSeries, TruncatedSeries> pentagonal_sides(long long order);

/* Monomial specialization c * q^e for identity parameters. */
struct Monomial {
    BigInt coeff = 0;
    long long q_power = 0;
};

/* F(alpha, beta, tau; q) = sum (alpha q;q)_n / (beta q;q)_n tau^n equals
 * its Durfee-rectangle form; tau needs q_power >= 1 for formal sense.
 * The (alpha tau q / beta; q)_n beta^n block is computed as the polynomial
 * prod_{j=1}^{n} (beta - alpha tau q^j), so beta = 0 is fine. */
std::pair<TruncatedSeries, TruncatedSeries> rogers_fine_sides(
    const Monomial& alpha, const Monomial& beta, const Monomial& tau,
    long long order);

/* sum_{n in Z} a^{n(n+1)/2} b^{n(n-1)/2}
 * = (-a;ab)_inf (-b;ab)_inf (ab;ab)_inf, with both monomials of q_power
 * >= 1. */
std::pair<TruncatedSeries, TruncatedSeries> jacobi_triple_sides(
    const Monomial& a, const Monomial& b, long long order);

} // namespace qpart
