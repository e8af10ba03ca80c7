#include "qpart/genfun.hpp"

#include <stdexcept>

#include "qpart/errors.hpp"

namespace qpart {

namespace {

TruncatedSeries ratio(const std::vector<FactorSpec>& numerator,
                      const std::vector<FactorSpec>& denominator,
                      long long order) {
    TruncatedSeries num = pochhammer_product(numerator, order);
    TruncatedSeries den = pochhammer_product(denominator, order);
    return num * den.invert();
}

TruncatedSeries two_part_duplicate4_genfun(long long order) {
    /* 2q^4/((1-q^2)(1-q^4)) + q^3/(1-q^2)^2 */
    TruncatedSeries even = TruncatedSeries::monomial(order, 2, 4);
    even.mul_geometric(1, 2);
    even.mul_geometric(1, 4);
    TruncatedSeries mixed = TruncatedSeries::monomial(order, 1, 3);
    mixed.mul_geometric(1, 2);
    mixed.mul_geometric(1, 2);
    return even + mixed;
}

} // namespace

TruncatedSeries class_genfun(const ClassSpec& c, long long order) {
    const long long s = c.s();
    const long long t = c.t();
    switch (c.kind()) {
        case ClassSpec::Kind::Modular:
            /* (-q;q) / (q^s;q^s) */
            return ratio({{1, 1, 1, +1}}, {{1, s, s, -1}}, order);
        case ClassSpec::Kind::Congruent:
            /* 1 / ((q;q^2)(q^s;q^s)) */
            return ratio({}, {{1, 1, 2, -1}, {1, s, s, -1}}, order);
        case ClassSpec::Kind::Duplicate:
            /* (-q;q) / ((-q^{s/2};q^{s/2})(q^{s/2};q^{s/2})) */
            return ratio({{1, 1, 1, +1}},
                         {{1, s / 2, s / 2, +1}, {1, s / 2, s / 2, -1}},
                         order);
        case ClassSpec::Kind::CongruentDistinct:
            /* (q^t;q^{2t})(q^{ts};q^{ts}) / ((q;q^2)(q^s;q^s)) */
            return ratio({{1, t, 2 * t, -1}, {1, t * s, t * s, -1}},
                         {{1, 1, 2, -1}, {1, s, s, -1}}, order);
        case ClassSpec::Kind::EClass:
            /* (q^2;q^2)(q^t;q^t)(q^{ts};q^{ts})
             * / ((q;q)(q^s;q^s)(q^{2t};q^{2t})) */
            return ratio(
                {{1, 2, 2, -1}, {1, t, t, -1}, {1, t * s, t * s, -1}},
                {{1, 1, 1, -1}, {1, s, s, -1}, {1, 2 * t, 2 * t, -1}}, order);
        case ClassSpec::Kind::Pod:
            /* (q^2;q^2) / ((q;q)(q^4;q^4)) */
            return ratio({{1, 2, 2, -1}}, {{1, 1, 1, -1}, {1, 4, 4, -1}},
                         order);
        case ClassSpec::Kind::Ped:
            /* (-q^2;q^2) / (q;q^2) */
            return ratio({{1, 2, 2, +1}}, {{1, 1, 2, -1}}, order);
        case ClassSpec::Kind::Unrestricted:
            return ratio({}, {{1, 1, 1, -1}}, order);
        case ClassSpec::Kind::TwoPartDuplicate4:
            return two_part_duplicate4_genfun(order);
        case ClassSpec::Kind::VClass:
        case ClassSpec::Kind::WClass:
            throw UnsupportedClass("no product form for " + c.name());
    }
    throw std::logic_error("unreachable");
}

TruncatedSeries over_genfun(OverKind kind, long long s, ProductForm form,
                            long long order) {
    if (s < 4 || s % 2 != 0)
        throw std::invalid_argument("s must be an even integer >= 4");
    const long long h = s / 2;
    switch (kind) {
        case OverKind::Modular:
            if (form == ProductForm::First)
                /* (-2q;q)(-q^s;q^s) / (q^s;q^s) */
                return ratio({{2, 1, 1, +1}, {1, s, s, +1}}, {{1, s, s, -1}},
                             order);
            /* (-2q;q)(q^{2s};q^{2s}) / (q^s;q^s)^2 */
            return ratio({{2, 1, 1, +1}, {1, 2 * s, 2 * s, -1}},
                         {{1, s, s, -1}, {1, s, s, -1}}, order);
        case OverKind::Congruent:
            if (form == ProductForm::First)
                /* (-q;q^2)(-q^s;q^s) / ((q;q^2)(q^s;q^s)) */
                return ratio({{1, 1, 2, +1}, {1, s, s, +1}},
                             {{1, 1, 2, -1}, {1, s, s, -1}}, order);
            /* (q^2;q^2)^3 (q^{2s};q^{2s}) / ((q;q)^2 (q^4;q^4)(q^s;q^s)^2) */
            return ratio({{1, 2, 2, -1},
                          {1, 2, 2, -1},
                          {1, 2, 2, -1},
                          {1, 2 * s, 2 * s, -1}},
                         {{1, 1, 1, -1},
                          {1, 1, 1, -1},
                          {1, 4, 4, -1},
                          {1, s, s, -1},
                          {1, s, s, -1}},
                         order);
        case OverKind::Duplicate:
            if (form == ProductForm::First)
                /* (-2q;q)(-q^{s/2};q^{s/2})
                 * / ((-2q^{s/2};q^{s/2})(q^{s/2};q^{s/2})) */
                return ratio({{2, 1, 1, +1}, {1, h, h, +1}},
                             {{2, h, h, +1}, {1, h, h, -1}}, order);
            /* (-2q;q)(q^s;q^s) / ((-2q^{s/2};q^{s/2})(q^{s/2};q^{s/2})^2) */
            return ratio({{2, 1, 1, +1}, {1, s, s, -1}},
                         {{2, h, h, +1}, {1, h, h, -1}, {1, h, h, -1}},
                         order);
    }
    throw std::logic_error("unreachable");
}

} // namespace qpart
