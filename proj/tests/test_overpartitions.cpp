#include <doctest.h>

#include <set>
#include <vector>

#include "qpart/genfun.hpp"
#include "qpart/overpartitions.hpp"
#include "qpart/series.hpp"

using namespace qpart;

namespace {

/* Test-local dense polynomial helpers, independent of TruncatedSeries. */
using Poly = std::vector<long long>;

Poly poly_mul(const Poly& a, const Poly& b, size_t cap) {
    Poly out(cap + 1, 0);
    for (size_t i = 0; i < a.size() && i <= cap; ++i)
        for (size_t j = 0; j < b.size() && i + j <= cap; ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

/* (1 + a q^e + a^2 q^{2e} + ...) up to cap. */
Poly poly_geo(long long a, size_t e, size_t cap) {
    Poly out(cap + 1, 0);
    long long coeff = 1;
    for (size_t i = 0; i <= cap; i += e) {
        out[i] = coeff;
        coeff *= a;
    }
    return out;
}

Poly poly_binomial(long long a, size_t e, size_t cap) {
    Poly out(cap + 1, 0);
    out[0] = 1;
    if (e <= cap) out[e] = a;
    return out;
}

} // namespace

TEST_CASE("overpartition enumeration") {
    std::vector<std::string> one;
    for_each_overpartition(
        1, [&](const Overpartition& op) { one.push_back(op.str()); });
    CHECK(one == std::vector<std::string>{"1", "1~"});

    CHECK(count_overpartitions(0) == 1);
    CHECK(count_overpartitions(1) == 2);
    CHECK(count_overpartitions(4) == 14);

    long long visited = 0;
    std::set<std::string> distinct;
    for_each_overpartition(6, [&](const Overpartition& op) {
        ++visited;
        distinct.insert(op.str());
        CHECK(op.weight() == 6);
    });
    CHECK(BigInt(visited) == count_overpartitions(6));
    CHECK(BigInt(static_cast<long long>(distinct.size())) ==
          count_overpartitions(6));
}

TEST_CASE("enumeration matches the unrestricted product") {
    TruncatedSeries gf = pochhammer_product({{1, 1, 1, +1}}, 20) *
                         pochhammer_product({{1, 1, 1, -1}}, 20).invert();
    for (long long n = 0; n <= 20; ++n)
        CHECK(count_overpartitions(n) == gf.coeff(n));
}

TEST_CASE("both product forms agree for all three families") {
    for (long long s : {4, 6, 8})
        for (OverKind kind :
             {OverKind::Modular, OverKind::Congruent, OverKind::Duplicate}) {
            TruncatedSeries first = over_genfun(kind, s, ProductForm::First, 60);
            TruncatedSeries second =
                over_genfun(kind, s, ProductForm::Second, 60);
            CHECK(first == second);
            CHECK(first.coeff(0) == 1);
            for (long long n = 0; n <= 60; ++n) CHECK(first.coeff(n) >= 0);
        }
}

TEST_CASE("odd-part overpartition series against an independent expansion") {
    /* (-q;q^2)(-q^4;q^4) / ((q;q^2)(q^4;q^4)) to order 6 by plain
     * polynomial arithmetic: odd values contribute (1+q^m)/(1-q^m), the
     * single relevant multiple of 4 contributes (1+q^4)/(1-q^4). */
    const size_t cap = 6;
    Poly expansion{1};
    for (size_t m : {1u, 3u, 5u}) {
        expansion = poly_mul(expansion, poly_binomial(1, m, cap), cap);
        expansion = poly_mul(expansion, poly_geo(1, m, cap), cap);
    }
    expansion = poly_mul(expansion, poly_binomial(1, 4, cap), cap);
    expansion = poly_mul(expansion, poly_geo(1, 4, cap), cap);
    CHECK(expansion == Poly{1, 2, 2, 4, 8, 12, 16});

    TruncatedSeries series =
        over_genfun(OverKind::Congruent, 4, ProductForm::First, 6);
    for (size_t n = 0; n <= cap; ++n)
        CHECK(series.coeff(static_cast<long long>(n)) ==
              expansion[n]);
}

TEST_CASE("doubled factors expand the overline choices") {
    /* The modular family's series dominates the plain modular counts: its
     * coefficient at q^1 is 2 (an overlined or plain single part). */
    TruncatedSeries m4 = over_genfun(OverKind::Modular, 4, ProductForm::First, 8);
    CHECK(m4.coeff(0) == 1);
    CHECK(m4.coeff(1) == 2);
}
