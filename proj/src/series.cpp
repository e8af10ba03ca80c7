#include "qpart/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "qpart/errors.hpp"

namespace qpart {

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
    TruncatedSeries out(std::min(order(), rhs.order()));
    for (long long i = 0; i <= out.order(); ++i)
        out.coeff(i) = coeff(i) + rhs.coeff(i);
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
    TruncatedSeries out(std::min(order(), rhs.order()));
    for (long long i = 0; i <= out.order(); ++i)
        out.coeff(i) = coeff(i) - rhs.coeff(i);
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
    TruncatedSeries out(std::min(order(), rhs.order()));
    for (long long i = 0; i <= out.order(); ++i) {
        if (coeff(i) == 0) continue;
        for (long long j = 0; i + j <= out.order(); ++j) {
            if (rhs.coeff(j) == 0) continue;
            out.coeff(i + j) += coeff(i) * rhs.coeff(j);
        }
    }
    return out;
}

void TruncatedSeries::mul_binomial(const BigInt& c, long long e) {
    if (e <= 0) throw std::invalid_argument("binomial exponent must be >= 1");
    if (c == 0) return;
    for (long long i = order(); i >= e; --i) {
        if (coeff_[static_cast<size_t>(i - e)] == 0) continue;
        coeff_[static_cast<size_t>(i)] += c * coeff_[static_cast<size_t>(i - e)];
    }
}

void TruncatedSeries::mul_geometric(const BigInt& c, long long e) {
    if (e <= 0) throw std::invalid_argument("geometric exponent must be >= 1");
    /* (sum a_i q^i) / (1 - c q^e): b_i = a_i + c b_{i-e}. */
    for (long long i = e; i <= order(); ++i)
        coeff_[static_cast<size_t>(i)] += c * coeff_[static_cast<size_t>(i - e)];
}

TruncatedSeries TruncatedSeries::invert() const {
    if (coeff_[0] != 1 && coeff_[0] != -1)
        throw NonUnitConstantTerm(
            "series inversion needs constant term +1 or -1");
    /* With u = a_0 = 1/a_0: b_0 = u and b_n = -u * sum_{k=1}^n a_k b_{n-k}. */
    TruncatedSeries out(order());
    const BigInt unit = coeff_[0];
    out.coeff_[0] = unit;
    for (long long n = 1; n <= order(); ++n) {
        BigInt acc = 0;
        for (long long k = 1; k <= n; ++k) {
            if (coeff_[static_cast<size_t>(k)] == 0) continue;
            acc += coeff_[static_cast<size_t>(k)] *
                   out.coeff_[static_cast<size_t>(n - k)];
        }
        out.coeff_[static_cast<size_t>(n)] = -unit * acc;
    }
    return out;
}

TruncatedSeries TruncatedSeries::shifted(long long e) const {
    TruncatedSeries out(order());
    for (long long i = 0; i + e <= order(); ++i)
        out.coeff(i + e) = coeff(i);
    return out;
}

TruncatedSeries TruncatedSeries::scaled(const BigInt& c) const {
    TruncatedSeries out(order());
    for (long long i = 0; i <= order(); ++i) out.coeff(i) = coeff(i) * c;
    return out;
}

std::vector<BigInt> TruncatedSeries::prefix(long long upto) const {
    long long n = std::min(order(), upto);
    return std::vector<BigInt>(coeff_.begin(), coeff_.begin() + n + 1);
}

TruncatedSeries pochhammer_product(const std::vector<FactorSpec>& factors,
                                   long long order) {
    TruncatedSeries out = TruncatedSeries::one(order);
    for (const FactorSpec& f : factors) {
        if (f.offset < 1) throw std::invalid_argument("factor offset must be >= 1");
        if (f.step < 1) throw std::invalid_argument("factor step must be >= 1");
        BigInt c = f.sign >= 0 ? f.coeff : -f.coeff;
        for (long long e = f.offset; e <= order; e += f.step)
            out.mul_binomial(c, e);
    }
    return out;
}

TruncatedSeries theta_psi(int sign, long long order) {
    TruncatedSeries out(order);
    for (long long k = 0;; ++k) {
        long long t = k * (k + 1) / 2;
        if (t > order) break;
        out.coeff(t) = (sign >= 0 || t % 2 == 0) ? 1 : -1;
    }
    return out;
}

} // namespace qpart
