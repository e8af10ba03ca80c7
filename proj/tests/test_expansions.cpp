#include <doctest.h>

#include "qpart/classes.hpp"
#include "qpart/errors.hpp"
#include "qpart/expansions.hpp"
#include "qpart/series.hpp"
#include "qpart/weighted.hpp"

using namespace qpart;

TEST_CASE("weighted arithmetic") {
    /* (1 + zb q)(1 - z q^2) = 1 + zb q - z q^2 - z^2 b q^3 */
    WeightedSeries a = WeightedSeries::one(2, 5);
    a.mul_binomial(1, {1, 1}, 1);
    a.mul_binomial(-1, {1, 0}, 2);
    CHECK(a.coeff(0, {0, 0}) == 1);
    CHECK(a.coeff(1, {1, 1}) == 1);
    CHECK(a.coeff(2, {1, 0}) == -1);
    CHECK(a.coeff(3, {2, 1}) == -1);
    CHECK(a.coeff(3, {1, 1}) == 0);

    WeightedSeries univariate = WeightedSeries::one(1, 5);
    CHECK_THROWS_AS(a * univariate, ArityMismatch);
    CHECK_THROWS_AS(a + univariate, ArityMismatch);
    CHECK_THROWS_AS(a.specialize({1}), ArityMismatch);
}

TEST_CASE("specialization is a ring homomorphism") {
    unsigned long long state = 0x853c49e6748fea9bULL;
    auto next = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long long>((state >> 33) % 5) - 2;
    };
    for (int trial = 0; trial < 10; ++trial) {
        WeightedSeries a(2, 12), b(2, 12);
        for (long long n = 0; n <= 12; ++n)
            for (int ze = 0; ze <= 2; ++ze)
                for (int be = 0; be <= 2; ++be) {
                    a.add_term(n, {ze, be}, next());
                    b.add_term(n, {ze, be}, next());
                }
        const std::vector<BigInt> at{2, -1};
        TruncatedSeries lhs = (a * b).specialize(at);
        TruncatedSeries rhs = a.specialize(at) * b.specialize(at);
        CHECK(lhs == rhs);
        CHECK((a + b).specialize(at) ==
              a.specialize(at) + b.specialize(at));
    }
}

TEST_CASE("refined duplicate product matches the counting oracle") {
    for (long long s : {4, 6}) {
        WeightedSeries lhs = duplicate_refined_lhs(s, 20);
        for (long long n = 0; n <= 20; ++n) {
            auto counts = refined_duplicate_counts(n, s);
            BigInt total = 0;
            for (const auto& [key, value] : lhs.at(n)) total += value;
            for (const auto& [rl, value] : counts) {
                CAPTURE(s);
                CAPTURE(n);
                CHECK(lhs.coeff(n, {static_cast<int>(rl.first),
                                    static_cast<int>(rl.second)}) == value);
            }
            /* No stray monomials beyond the oracle's support. */
            CHECK(lhs.at(n).size() == counts.size());
            CHECK(total == count(n, ClassSpec::duplicate(s)));
        }
    }
}

TEST_CASE("refined product collapses to the plain counting series") {
    WeightedSeries lhs = duplicate_refined_lhs(4, 10);
    TruncatedSeries collapsed = lhs.specialize({1, 1});
    std::vector<BigInt> expected{1, 1, 1, 2, 3, 4, 5, 7, 10, 13, 16};
    for (long long n = 0; n <= 10; ++n)
        CHECK(collapsed.coeff(n) == expected[static_cast<size_t>(n)]);
}

TEST_CASE("expansion identity holds in the classical case s = 4") {
    WeightedSeries lhs = duplicate_refined_lhs(4, 30);
    CHECK(lhs == duplicate_refined_rhs(4, 30, RhsDenominators::Displayed));
    CHECK(lhs == duplicate_refined_rhs(4, 30, RhsDenominators::CaseByCase));
}

TEST_CASE("the two bracket readings are the same series") {
    for (long long s : {4, 6, 8})
        CHECK(duplicate_refined_rhs(s, 30, RhsDenominators::Displayed) ==
              duplicate_refined_rhs(s, 30, RhsDenominators::CaseByCase));
}

TEST_CASE("expansion dissection misses short off-lattice partitions for "
          "s >= 6") {
    /* The partition (2,1) is 6-duplicate with two off-lattice parts, so the
     * product carries z^2 b^2 q^3; the displayed expansion cannot produce
     * it (its below-square factor admits no parts at k = 1), and it also
     * manufactures z b^2 q^6, which no single part realizes. This freezes
     * the counterexample; the expansion is exact only at s = 4. */
    WeightedSeries lhs = duplicate_refined_lhs(6, 10);
    WeightedSeries rhs = duplicate_refined_rhs(6, 10);
    CHECK(lhs.coeff(3, {2, 2}) == 1);
    CHECK(rhs.coeff(3, {2, 2}) == 0);
    CHECK(lhs.coeff(6, {1, 2}) == 0);
    CHECK(rhs.coeff(6, {1, 2}) == 1);
}

TEST_CASE("odd/even refined expansion") {
    auto [lhs, rhs] = alladi_sides(30);
    CHECK(lhs == rhs);

    /* b marks odd parts, c marks even parts, all distinct odd. */
    CHECK(lhs.coeff(3, {1, 1}) == 1); /* (2,1) */
    CHECK(lhs.coeff(3, {1, 0}) == 1); /* (3)   */
    CHECK(lhs.coeff(4, {0, 1}) == 1); /* (4)   */
    CHECK(lhs.coeff(4, {0, 2}) == 1); /* (2,2) */
}

TEST_CASE("reindexing the refined product gives the odd/even markers") {
    WeightedSeries zb = duplicate_refined_lhs(4, 30);
    auto [lhs, rhs] = alladi_sides(30);
    CHECK(alladi_reindex(zb) == lhs);
    CHECK(alladi_reindex(duplicate_refined_rhs(4, 30)) == rhs);
}

TEST_CASE("erasing the even marker leaves the distinct-odd product") {
    auto [lhs, rhs] = alladi_sides(24);
    /* Terms free of c on both sides equal prod (1 + b q^{2m-1}). */
    WeightedSeries product = WeightedSeries::one(2, 24);
    for (long long o = 1; o <= 24; o += 2) product.mul_binomial(1, {1, 0}, o);
    for (long long n = 0; n <= 24; ++n)
        for (const auto& [e, c] : product.at(n)) {
            CHECK(lhs.coeff(n, e) == c);
            CHECK(rhs.coeff(n, e) == c);
        }
    for (long long n = 0; n <= 24; ++n)
        for (const auto& [e, c] : lhs.at(n))
            if (e[1] == 0) CHECK(product.coeff(n, e) == c);
}

TEST_CASE("the c = 0 expansion transports to the distinct-part identity") {
    /* Substituting b -> bq and then q^2 -> q in the c-free layer sends
     * b^l q^m to b^l q^{(m+l)/2}; the result must be both sides of the
     * distinct-part expansion. */
    auto [lhs, rhs] = alladi_sides(40);
    auto [sy_lhs, sy_rhs] = sylvester_sides(20);
    auto transport = [](const WeightedSeries& side) {
        WeightedSeries out(1, 20);
        for (long long m = 0; m <= side.order(); ++m)
            for (const auto& [e, c] : side.at(m)) {
                if (e[1] != 0) continue;
                long long shifted = m + e[0];
                REQUIRE(shifted % 2 == 0);
                out.add_term(shifted / 2, {e[0], 0}, c);
            }
        return out;
    };
    CHECK(transport(lhs) == sy_lhs);
    CHECK(transport(rhs) == sy_rhs);
}

TEST_CASE("triangular sum against its product form") {
    auto [lhs, rhs] = gauss_sides(100);
    CHECK(lhs == rhs);
}

TEST_CASE("euler product against its pentagonal sum") {
    auto [lhs, rhs] = pentagonal_sides(100);
    CHECK(lhs == rhs);
}

TEST_CASE("distinct-even-part expansion and its reductions") {
    auto [lhs, rhs] = lebesgue_sides(40);
    CHECK(lhs == rhs);
    CHECK(lhs.specialize({-1}) == theta_psi(+1, 40));
    /* At b = +1 the product counts distinct even plus unrestricted odd. */
    TruncatedSeries ped_like = lhs.specialize({1});
    for (long long n = 0; n <= 40; ++n)
        CHECK(ped_like.coeff(n) == count(n, ClassSpec::ped()));
}

TEST_CASE("distinct-part expansion and its reduction") {
    auto [lhs, rhs] = sylvester_sides(40);
    CHECK(lhs == rhs);
    CHECK(lhs.specialize({-1}) == pochhammer_product({{1, 1, 1, -1}}, 40));
}

TEST_CASE("durfee rectangle transformation at monomial parameters") {
    const Monomial zero{0, 0};
    const Monomial one{1, 0};
    const Monomial q1{1, 1};
    auto check_pair = [](const Monomial& alpha, const Monomial& beta,
                         const Monomial& tau) {
        auto [lhs, rhs] = rogers_fine_sides(alpha, beta, tau, 50);
        CHECK(lhs == rhs);
    };
    check_pair(zero, zero, q1);
    check_pair(one, zero, q1);
    check_pair(Monomial{-1, 0}, q1, q1);
    check_pair(q1, one, Monomial{1, 2});
    check_pair(Monomial{2, 1}, zero, Monomial{-1, 1});

    /* F(0, 0, q) is the geometric series. */
    auto [lhs, rhs] = rogers_fine_sides(zero, zero, q1, 20);
    for (long long n = 0; n <= 20; ++n) CHECK(lhs.coeff(n) == 1);

    CHECK_THROWS_AS(rogers_fine_sides(one, zero, one, 10),
                    InvalidSpecialization);
}

TEST_CASE("triple product on monomial pairs") {
    auto [psi_lhs, psi_rhs] = jacobi_triple_sides({1, 1}, {1, 3}, 50);
    CHECK(psi_lhs == psi_rhs);
    CHECK(psi_lhs == theta_psi(+1, 50));

    auto [psim_lhs, psim_rhs] = jacobi_triple_sides({-1, 1}, {-1, 3}, 50);
    CHECK(psim_lhs == psim_rhs);
    CHECK(psim_lhs == theta_psi(-1, 50));

    auto [f12_lhs, f12_rhs] = jacobi_triple_sides({1, 1}, {1, 2}, 50);
    CHECK(f12_lhs == f12_rhs);
    auto [big_lhs, big_rhs] = jacobi_triple_sides({2, 1}, {1, 2}, 40);
    CHECK(big_lhs == big_rhs);

    CHECK_THROWS_AS(jacobi_triple_sides({1, 0}, {1, 3}, 10),
                    InvalidSpecialization);
    CHECK_THROWS_AS(jacobi_triple_sides({0, 1}, {1, 3}, 10),
                    InvalidSpecialization);
}
