#include "qpart/expansions.hpp"

#include <stdexcept>

#include "qpart/errors.hpp"

namespace qpart {

namespace {

void require_even_s(long long s) {
    if (s < 4 || s % 2 != 0)
        throw std::invalid_argument("s must be an even integer >= 4");
}

/* Starts a weighted series equal to coeff * z^ze * b^be * q^qe. */
WeightedSeries ws_monomial(long long order, const BigInt& coeff,
                           WeightedSeries::Exps e, long long q_exp) {
    WeightedSeries out(2, order);
    out.add_term(q_exp, e, coeff);
    return out;
}

/* Multiplies by prod_{t=1}^{s/2-1} (-x q^t; q^{s/2})_j expanded as
 * binomial factors (1 + x q^{t + m s/2}); x is the marker monomial e. */
void mul_shifted_pochhammer(WeightedSeries& ws, long long s, long long j,
                            WeightedSeries::Exps e) {
    for (long long t = 1; t <= s / 2 - 1; ++t)
        for (long long m = 0; m < j; ++m)
            ws.mul_binomial(1, e, t + m * s / 2);
}

/* Divides by (x q^{s/2}; q^{s/2})_j, i.e. multiplies the geometric
 * inverses of (1 - x q^{m s/2}) for m = 1..j. */
void div_lattice_pochhammer(WeightedSeries& ws, long long s, long long j,
                            WeightedSeries::Exps e) {
    for (long long m = 1; m <= j; ++m) ws.mul_geometric(1, e, m * s / 2);
}

} // namespace

WeightedSeries duplicate_refined_lhs(long long s, long long order) {
    require_even_s(s);
    WeightedSeries ws = WeightedSeries::one(2, order);
    for (long long n = 1; n <= order; ++n) ws.mul_binomial(1, {1, 1}, n);
    for (long long m = s / 2; m <= order; m += s / 2) {
        ws.mul_geometric(-1, {1, 1}, m); /* 1/(1 + z b q^m) */
        ws.mul_geometric(1, {1, 0}, m);  /* 1/(1 - z q^m)   */
    }
    return ws;
}

WeightedSeries duplicate_refined_rhs(long long s, long long order,
                                     RhsDenominators variant,
                                     long long summands) {
    require_even_s(s);
    const long long half = s / 2;
    if (summands == 0) {
        /* Least K whose k-th summand starts beyond the order: the lowest
         * q-degree of the k-th term is s k^2/2 - (s/2 - 1). */
        while (s * (summands + 1) * (summands + 1) / 2 - (half - 1) <= order)
            ++summands;
    }

    WeightedSeries rhs = WeightedSeries::one(2, order);
    for (long long k = 1; k <= summands; ++k) {
        const long long square = s * k * k / 2;
        const long long edge = half * (k - 1) + 1;

        /* Full-corner case: z^k q^{sk^2/2} times the two edge products. */
        WeightedSeries corner =
            ws_monomial(order, 1, {static_cast<int>(k), 0}, square);
        for (long long j = 0; j <= half - 2; ++j) {
            corner.mul_binomial(1, {1, 1}, edge + j);
            corner.mul_binomial(1, {0, 1}, edge + j);
        }

        /* Short-corner cases: the bottom-right box holds i < s/2. */
        WeightedSeries shorts(2, order);
        for (long long i = 1; i <= half - 1; ++i)
            shorts.add_term(square - i, {static_cast<int>(k), 1}, 1);

        if (variant == RhsDenominators::Displayed) {
            shorts.mul_binomial(-1, {1, 0}, half * k);
            shorts.mul_binomial(-1, {0, 0}, half * k);
            WeightedSeries term = corner + shorts;
            mul_shifted_pochhammer(term, s, k - 1, {1, 1});
            mul_shifted_pochhammer(term, s, k - 1, {0, 1});
            div_lattice_pochhammer(term, s, k, {1, 0});
            div_lattice_pochhammer(term, s, k, {0, 0});
            rhs = rhs + term;
        } else {
            /* The edge factors applied at construction complete the
             * (k-1)-level products to level k for the full-corner case. */
            mul_shifted_pochhammer(corner, s, k - 1, {1, 1});
            mul_shifted_pochhammer(corner, s, k - 1, {0, 1});
            div_lattice_pochhammer(corner, s, k, {1, 0});
            div_lattice_pochhammer(corner, s, k, {0, 0});
            mul_shifted_pochhammer(shorts, s, k - 1, {1, 1});
            mul_shifted_pochhammer(shorts, s, k - 1, {0, 1});
            div_lattice_pochhammer(shorts, s, k - 1, {1, 0});
            div_lattice_pochhammer(shorts, s, k - 1, {0, 0});
            rhs = rhs + corner + shorts;
        }
    }
    return rhs;
}

std::pair<WeightedSeries, WeightedSeries> alladi_sides(long long order) {
    /* Markers: index 0 tracks b (odd parts), index 1 tracks c (even). */
    WeightedSeries lhs = WeightedSeries::one(2, order);
    for (long long o = 1; o <= order; o += 2) lhs.mul_binomial(1, {1, 0}, o);
    for (long long m = 2; m <= order; m += 2) lhs.mul_geometric(1, {0, 1}, m);

    WeightedSeries rhs = WeightedSeries::one(2, order);
    for (long long k = 1; 2 * k * k - 1 <= order; ++k) {
        WeightedSeries term = ws_monomial(order, 1, {0, 0}, 2 * k * k - 1);
        for (long long m = 1; m <= k - 1; ++m) {
            term.mul_binomial(1, {1, 0}, 2 * m - 1); /* (1 + b q^{2m-1}) */
            WeightedSeries mixed(2, order);          /* (c + b q^{2m-1}) */
            mixed.add_term(0, {0, 1}, 1);
            mixed.add_term(2 * m - 1, {1, 0}, 1);
            term = term * mixed;
        }
        WeightedSeries tail(2, order); /* (b + c q) */
        tail.add_term(0, {1, 0}, 1);
        tail.add_term(1, {0, 1}, 1);
        term = term * tail;
        term.mul_binomial(1, {1, 0}, 4 * k - 1);
        for (long long j = 1; j <= k; ++j) {
            term.mul_geometric(1, {0, 1}, 2 * j); /* 1/(cq^2;q^2)_k */
            term.mul_geometric(1, {0, 0}, 2 * j); /* 1/(q^2;q^2)_k  */
        }
        rhs = rhs + term;
    }
    return {lhs, rhs};
}

WeightedSeries alladi_reindex(const WeightedSeries& zb_series) {
    WeightedSeries out(2, zb_series.order());
    for (long long n = 0; n <= zb_series.order(); ++n)
        for (const auto& [e, c] : zb_series.at(n)) {
            const int r = e[0];
            const int l = e[1];
            if (l > r)
                throw std::invalid_argument(
                    "off-lattice marker power exceeds total");
            out.add_term(n, {l, r - l}, c);
        }
    return out;
}

std::pair<TruncatedSeries, TruncatedSeries> gauss_sides(long long order) {
    TruncatedSeries lhs = theta_psi(+1, order);
    TruncatedSeries rhs =
        pochhammer_product({{1, 2, 2, -1}}, order) *
        pochhammer_product({{1, 1, 2, -1}}, order).invert();
    return {lhs, rhs};
}

std::pair<TruncatedSeries, TruncatedSeries> pentagonal_sides(long long order) {
    TruncatedSeries lhs = pochhammer_product({{1, 1, 1, -1}}, order);
    TruncatedSeries rhs = TruncatedSeries::one(order);
    for (long long k = 1;; ++k) {
        long long lo = (3 * k * k - k) / 2;
        long long hi = (3 * k * k + k) / 2;
        if (lo > order) break;
        BigInt sign = (k % 2 == 0) ? 1 : -1;
        rhs.coeff(lo) += sign;
        if (hi <= order) rhs.coeff(hi) += sign;
    }
    return {lhs, rhs};
}

std::pair<WeightedSeries, WeightedSeries> lebesgue_sides(long long order) {
    WeightedSeries lhs(1, order);
    for (long long n = 0;; ++n) {
        long long t = n * (n + 1) / 2;
        if (t > order) break;
        WeightedSeries term(1, order);
        term.add_term(t, {0, 0}, 1);
        for (long long j = 1; j <= n; ++j) {
            term.mul_binomial(1, {1, 0}, j);
            term.mul_geometric(1, {0, 0}, j);
        }
        lhs = lhs + term;
    }
    WeightedSeries rhs = WeightedSeries::one(1, order);
    for (long long m = 1; 2 * m - 1 <= order; ++m) {
        if (2 * m <= order) rhs.mul_binomial(1, {1, 0}, 2 * m);
        rhs.mul_geometric(1, {0, 0}, 2 * m - 1);
    }
    return {lhs, rhs};
}

std::pair<WeightedSeries, WeightedSeries> sylvester_sides(long long order) {
    WeightedSeries lhs = WeightedSeries::one(1, order);
    for (long long n = 1; n <= order; ++n) lhs.mul_binomial(1, {1, 0}, n);

    WeightedSeries rhs = WeightedSeries::one(1, order);
    for (long long k = 1; (3 * k * k - k) / 2 <= order; ++k) {
        WeightedSeries term(1, order);
        term.add_term((3 * k * k - k) / 2, {static_cast<int>(k), 0}, 1);
        for (long long j = 1; j <= k - 1; ++j) term.mul_binomial(1, {1, 0}, j);
        term.mul_binomial(1, {1, 0}, 2 * k);
        for (long long j = 1; j <= k; ++j) term.mul_geometric(1, {0, 0}, j);
        rhs = rhs + term;
    }
    return {lhs, rhs};
}

namespace {

void validate_monomial(const Monomial& m, const char* name) {
    if (m.q_power < 0)
        throw InvalidSpecialization(std::string(name) +
                                    " needs a nonnegative q power");
}

BigInt ipow(const BigInt& base, long long e) {
    BigInt result = 1;
    for (long long i = 0; i < e; ++i) result *= base;
    return result;
}

} // namespace

std::pair<TruncatedSeries, TruncatedSeries> rogers_fine_sides(
    const Monomial& alpha, const Monomial& beta, const Monomial& tau,
    long long order) {
    validate_monomial(alpha, "alpha");
    validate_monomial(beta, "beta");
    validate_monomial(tau, "tau");
    if (tau.coeff != 0 && tau.q_power < 1)
        throw InvalidSpecialization("tau must have q power >= 1");

    TruncatedSeries lhs(order);
    for (long long n = 0;; ++n) {
        long long base = tau.q_power * n;
        if (base > order) break;
        TruncatedSeries term =
            TruncatedSeries::monomial(order, ipow(tau.coeff, n), base);
        if (n > 0 && tau.coeff == 0) break;
        for (long long j = 1; j <= n; ++j) {
            if (alpha.coeff != 0)
                term.mul_binomial(-alpha.coeff, alpha.q_power + j);
            if (beta.coeff != 0)
                term.mul_geometric(beta.coeff, beta.q_power + j);
        }
        lhs = lhs + term;
        if (tau.q_power == 0) break; /* only the n = 0 term is formal */
    }

    TruncatedSeries rhs(order);
    const BigInt at_coeff = alpha.coeff * tau.coeff;
    const long long at_power = alpha.q_power + tau.q_power;
    for (long long n = 0; n * n <= order; ++n) {
        TruncatedSeries term =
            TruncatedSeries::monomial(order, ipow(tau.coeff, n),
                                      n * n + tau.q_power * n);
        if (n > 0 && tau.coeff == 0) break;
        for (long long j = 1; j <= n; ++j) {
            if (alpha.coeff != 0)
                term.mul_binomial(-alpha.coeff, alpha.q_power + j);
            /* (beta - alpha tau q^j) as an explicit two-term factor. */
            TruncatedSeries mixed =
                term.shifted(beta.q_power).scaled(beta.coeff) -
                term.shifted(at_power + j).scaled(at_coeff);
            term = mixed;
            if (beta.coeff != 0)
                term.mul_geometric(beta.coeff, beta.q_power + j);
        }
        term.mul_binomial(-at_coeff, at_power + 2 * n + 1);
        if (tau.coeff != 0)
            for (long long j = 0; j <= n; ++j)
                term.mul_geometric(tau.coeff, tau.q_power + j);
        rhs = rhs + term;
    }
    return {lhs, rhs};
}

std::pair<TruncatedSeries, TruncatedSeries> jacobi_triple_sides(
    const Monomial& a, const Monomial& b, long long order) {
    if (a.coeff == 0 || b.coeff == 0 || a.q_power < 1 || b.q_power < 1)
        throw InvalidSpecialization(
            "triple product needs nonzero monomials with q power >= 1");

    TruncatedSeries lhs(order);
    for (long long n = 0;; ++n) {
        long long up = n * (n + 1) / 2;
        long long down = n * (n - 1) / 2;
        long long e = a.q_power * up + b.q_power * down;
        if (e > order) break;
        lhs.coeff(e) += ipow(a.coeff, up) * ipow(b.coeff, down);
    }
    for (long long n = 1;; ++n) {
        long long up = n * (n - 1) / 2;
        long long down = n * (n + 1) / 2;
        long long e = a.q_power * up + b.q_power * down;
        if (e > order) break;
        lhs.coeff(e) += ipow(a.coeff, up) * ipow(b.coeff, down);
    }

    TruncatedSeries rhs = TruncatedSeries::one(order);
    const long long step = a.q_power + b.q_power;
    const BigInt ab = a.coeff * b.coeff;
    for (long long i = 0;; ++i) {
        long long ea = a.q_power + i * step;
        long long eb = b.q_power + i * step;
        long long em = (i + 1) * step;
        if (ea > order && eb > order && em > order) break;
        if (ea <= order) rhs.mul_binomial(a.coeff * ipow(ab, i), ea);
        if (eb <= order) rhs.mul_binomial(b.coeff * ipow(ab, i), eb);
        if (em <= order) rhs.mul_binomial(-ipow(ab, i + 1), em);
    }
    return {lhs, rhs};
}

} // namespace qpart
