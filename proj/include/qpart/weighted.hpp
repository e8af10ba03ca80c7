#pragma once

#include <array>
#include <map>
#include <vector>

#include "qpart/bigint.hpp"
#include "qpart/series.hpp"

namespace qpart {

/* Truncated series in q whose coefficients are sparse exact-integer
 * polynomials in one or two auxiliary markers. Marker exponents are
 * nonnegative; zero coefficients are never stored; q-arithmetic truncates
 * at the minimum order. */
class WeightedSeries {
public:
    /* Exponents of the markers; the second entry is 0 at arity 1. */
    using Exps = std::array<int, 2>;
    using Poly = std::map<Exps, BigInt>;

    WeightedSeries(int arity, long long order);
    static WeightedSeries one(int arity, long long order);

    int arity() const { return arity_; }
    long long order() const {
        return static_cast<long long>(coeff_.size()) - 1;
    }

    const Poly& at(long long q_exp) const {
        return coeff_[static_cast<size_t>(q_exp)];
    }

    void add_term(long long q_exp, Exps e, const BigInt& c);
    const BigInt& coeff(long long q_exp, Exps e) const;

    WeightedSeries operator+(const WeightedSeries& rhs) const;
    WeightedSeries operator*(const WeightedSeries& rhs) const;

    /* In-place multiply by 1 + c * markers^e * q^{q_exp}. */
    void mul_binomial(const BigInt& c, Exps e, long long q_exp);

    /* In-place multiply by 1/(1 - c * markers^e * q^{q_exp}), q_exp >= 1. */
    void mul_geometric(const BigInt& c, Exps e, long long q_exp);

    /* Markers evaluated at integers, collapsing to a plain q-series. */
    TruncatedSeries specialize(const std::vector<BigInt>& values) const;

    bool operator==(const WeightedSeries&) const = default;

private:
    int arity_;
    std::vector<Poly> coeff_;
    static const BigInt zero_;
};

} // namespace qpart
