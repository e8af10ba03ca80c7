#include "qpart/weighted.hpp"

#include <stdexcept>

#include "qpart/errors.hpp"

namespace qpart {

const BigInt WeightedSeries::zero_ = 0;

WeightedSeries::WeightedSeries(int arity, long long order)
    : arity_(arity), coeff_(static_cast<size_t>(order) + 1) {
    if (arity < 1 || arity > 2)
        throw std::invalid_argument("marker arity must be 1 or 2");
}

WeightedSeries WeightedSeries::one(int arity, long long order) {
    WeightedSeries s(arity, order);
    s.coeff_[0][{0, 0}] = 1;
    return s;
}

void WeightedSeries::add_term(long long q_exp, Exps e, const BigInt& c) {
    if (q_exp > order() || c == 0) return;
    if (e[0] < 0 || e[1] < 0)
        throw std::invalid_argument("marker exponents must be nonnegative");
    Poly& poly = coeff_[static_cast<size_t>(q_exp)];
    BigInt& slot = poly[e];
    slot += c;
    if (slot == 0) poly.erase(e);
}

const BigInt& WeightedSeries::coeff(long long q_exp, Exps e) const {
    if (q_exp < 0 || q_exp > order()) return zero_;
    const Poly& poly = coeff_[static_cast<size_t>(q_exp)];
    auto it = poly.find(e);
    return it == poly.end() ? zero_ : it->second;
}

WeightedSeries WeightedSeries::operator+(const WeightedSeries& rhs) const {
    if (arity_ != rhs.arity_)
        throw ArityMismatch("adding series of different marker arity");
    WeightedSeries out(arity_, std::min(order(), rhs.order()));
    for (long long n = 0; n <= out.order(); ++n) {
        out.coeff_[static_cast<size_t>(n)] = coeff_[static_cast<size_t>(n)];
        for (const auto& [e, c] : rhs.coeff_[static_cast<size_t>(n)])
            out.add_term(n, e, c);
    }
    return out;
}

WeightedSeries WeightedSeries::operator*(const WeightedSeries& rhs) const {
    if (arity_ != rhs.arity_)
        throw ArityMismatch("multiplying series of different marker arity");
    WeightedSeries out(arity_, std::min(order(), rhs.order()));
    for (long long i = 0; i <= out.order(); ++i) {
        const Poly& left = coeff_[static_cast<size_t>(i)];
        if (left.empty()) continue;
        for (long long j = 0; i + j <= out.order(); ++j) {
            const Poly& right = rhs.coeff_[static_cast<size_t>(j)];
            if (right.empty()) continue;
            for (const auto& [ea, ca] : left)
                for (const auto& [eb, cb] : right)
                    out.add_term(i + j, {ea[0] + eb[0], ea[1] + eb[1]},
                                 ca * cb);
        }
    }
    return out;
}

void WeightedSeries::mul_binomial(const BigInt& c, Exps e, long long q_exp) {
    if (q_exp < 0) throw std::invalid_argument("negative q exponent");
    if (c == 0) return;
    if (q_exp == 0 && e[0] == 0 && e[1] == 0) {
        /* Scalar 1 + c. */
        const BigInt factor = 1 + c;
        for (auto& poly : coeff_) {
            if (factor == 0) {
                poly.clear();
                continue;
            }
            for (auto& [exps, value] : poly) value *= factor;
        }
        return;
    }
    /* Work from high q-exponents down so each source is untouched; at
     * q_exp = 0 the marker shift makes the term new, so order is free. */
    for (long long n = order(); n >= q_exp; --n) {
        const Poly source = coeff_[static_cast<size_t>(n - q_exp)];
        for (const auto& [exps, value] : source)
            add_term(n, {exps[0] + e[0], exps[1] + e[1]}, c * value);
    }
}

void WeightedSeries::mul_geometric(const BigInt& c, Exps e, long long q_exp) {
    if (q_exp < 1)
        throw std::invalid_argument("geometric factor needs q exponent >= 1");
    for (long long n = q_exp; n <= order(); ++n) {
        const Poly source = coeff_[static_cast<size_t>(n - q_exp)];
        for (const auto& [exps, value] : source)
            add_term(n, {exps[0] + e[0], exps[1] + e[1]}, c * value);
    }
}

TruncatedSeries WeightedSeries::specialize(
    const std::vector<BigInt>& values) const {
    if (static_cast<int>(values.size()) != arity_)
        throw ArityMismatch("wrong number of marker values");
    auto power = [](const BigInt& base, int exp) {
        BigInt result = 1;
        for (int i = 0; i < exp; ++i) result *= base;
        return result;
    };
    TruncatedSeries out(order());
    for (long long n = 0; n <= order(); ++n) {
        BigInt acc = 0;
        for (const auto& [e, c] : coeff_[static_cast<size_t>(n)]) {
            BigInt term = c * power(values[0], e[0]);
            if (arity_ == 2) term *= power(values[1], e[1]);
            acc += term;
        }
        out.coeff(n) = acc;
    }
    return out;
}

} // namespace qpart
