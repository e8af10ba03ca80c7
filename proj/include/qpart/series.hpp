#pragma once

#include <vector>

#include "qpart/bigint.hpp"

namespace qpart {

/* Formal power series in q with exact integer coefficients, tracked for
 * exponents 0..order. Arithmetic never extends past the truncation order;
 * combining series of different orders truncates to the minimum. */
class TruncatedSeries {
public:
    explicit TruncatedSeries(long long order)
        : coeff_(static_cast<size_t>(order) + 1) {}

    static TruncatedSeries one(long long order) {
        TruncatedSeries s(order);
        s.coeff_[0] = 1;
        return s;
    }

    static TruncatedSeries monomial(long long order, const BigInt& c,
                                    long long exponent) {
        TruncatedSeries s(order);
        if (exponent <= order) s.coeff_[static_cast<size_t>(exponent)] = c;
        return s;
    }

    long long order() const {
        return static_cast<long long>(coeff_.size()) - 1;
    }

    const BigInt& coeff(long long i) const {
        return coeff_[static_cast<size_t>(i)];
    }
    BigInt& coeff(long long i) { return coeff_[static_cast<size_t>(i)]; }

    TruncatedSeries operator+(const TruncatedSeries& rhs) const;
    TruncatedSeries operator-(const TruncatedSeries& rhs) const;
    TruncatedSeries operator*(const TruncatedSeries& rhs) const;

    /* In-place multiply by (1 + c q^e); a no-op beyond the order. */
    void mul_binomial(const BigInt& c, long long e);

    /* In-place multiply by the geometric series 1/(1 - c q^e), e >= 1. */
    void mul_geometric(const BigInt& c, long long e);

    /* Series y with (*this) * y = 1 up to the order, by forward recurrence.
     * Throws NonUnitConstantTerm unless the constant term is +1 or -1. */
    TruncatedSeries invert() const;

    /* Multiplication by q^e (high coefficients fall off the end). */
    TruncatedSeries shifted(long long e) const;

    TruncatedSeries scaled(const BigInt& c) const;

    /* Coefficients of q^0..q^min(order, upto). */
    std::vector<BigInt> prefix(long long upto) const;

    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<BigInt> coeff_;
};

/* One family of factors prod_{i>=0, a+ib<=N} (1 + sign*c*q^{a+ib}) of a
 * q-Pochhammer style infinite product; offset >= 1 keeps every factor a
 * formal unit. */
struct FactorSpec {
    BigInt coeff = 1;
    long long offset = 1;
    long long step = 1;
    int sign = +1;
};

/* Exact truncated product of the factor families. Dropping the factors
 * whose lowest exponent exceeds N loses nothing below q^{N+1}. */
TruncatedSeries pochhammer_product(const std::vector<FactorSpec>& factors,
                                   long long order);

/* Sum over triangular numbers T_k = k(k+1)/2: for sign=+1 the series
 * sum q^{T_k}; for sign=-1 the series sum (-q)^{T_k}, i.e. coefficient
 * (-1)^{T_k} at T_k. Equals the matching Pochhammer product form. */
TruncatedSeries theta_psi(int sign, long long order);

} // namespace qpart
