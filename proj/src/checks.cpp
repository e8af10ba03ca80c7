#include "qpart/checks.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qpart/classes.hpp"
#include "qpart/expansions.hpp"
#include "qpart/genfun.hpp"
#include "qpart/overpartitions.hpp"
#include "qpart/recurrences.hpp"
#include "qpart/series.hpp"

namespace qpart {

namespace {

CheckResult compare_series(const std::string& name, const TruncatedSeries& a,
                           const TruncatedSeries& b) {
    long long order = std::min(a.order(), b.order());
    for (long long n = 0; n <= order; ++n) {
        if (a.coeff(n) == b.coeff(n)) continue;
        std::ostringstream detail;
        detail << "first mismatch at q^" << n << ": " << a.coeff(n)
               << " vs " << b.coeff(n);
        return {name, false, detail.str()};
    }
    return {name, true, "equal to order " + std::to_string(order)};
}

CheckResult compare_weighted(const std::string& name, const WeightedSeries& a,
                             const WeightedSeries& b) {
    long long order = std::min(a.order(), b.order());
    for (long long n = 0; n <= order; ++n) {
        if (a.at(n) == b.at(n)) continue;
        return {name, false,
                "first mismatch at q^" + std::to_string(n)};
    }
    return {name, true, "equal to order " + std::to_string(order)};
}

CheckResult check_gauss(const CheckParams& params) {
    long long order = params.order.value_or(200);
    auto [lhs, rhs] = gauss_sides(order);
    return compare_series("gauss", lhs, rhs);
}

CheckResult check_pentagonal(const CheckParams& params) {
    long long order = params.order.value_or(200);
    auto [lhs, rhs] = pentagonal_sides(order);
    CheckResult result = compare_series("pentagonal", lhs, rhs);
    if (!result.pass) return result;
    /* Support must be exactly the generalized pentagonal numbers. */
    for (long long n = 0; n <= order; ++n) {
        const BigInt& c = lhs.coeff(n);
        if (c == 0) continue;
        if (c != 1 && c != -1)
            return {"pentagonal", false,
                    "coefficient at q^" + std::to_string(n) + " not unit"};
    }
    return result;
}

CheckResult check_lebesgue(const CheckParams& params) {
    long long order = params.order.value_or(40);
    auto [lhs, rhs] = lebesgue_sides(order);
    CheckResult result = compare_weighted("lebesgue", lhs, rhs);
    if (!result.pass) return result;
    /* b = -1 collapses to the triangular-number series. */
    TruncatedSeries collapsed = lhs.specialize({-1});
    return compare_series("lebesgue", collapsed, theta_psi(+1, order));
}

CheckResult check_sylvester(const CheckParams& params) {
    long long order = params.order.value_or(40);
    auto [lhs, rhs] = sylvester_sides(order);
    CheckResult result = compare_weighted("sylvester", lhs, rhs);
    if (!result.pass) return result;
    TruncatedSeries collapsed = lhs.specialize({-1});
    return compare_series("sylvester",
                          collapsed,
                          pochhammer_product({{1, 1, 1, -1}}, order));
}

CheckResult check_rogers_fine(const CheckParams& params) {
    long long order = params.order.value_or(50);
    const std::vector<std::array<Monomial, 3>> cases = {
        {Monomial{0, 0}, Monomial{0, 0}, Monomial{1, 1}},
        {Monomial{1, 0}, Monomial{0, 0}, Monomial{1, 1}},
        {Monomial{-1, 0}, Monomial{1, 1}, Monomial{1, 1}},
        {Monomial{1, 1}, Monomial{1, 0}, Monomial{1, 2}},
        {Monomial{2, 1}, Monomial{0, 0}, Monomial{-1, 1}},
    };
    for (const auto& [alpha, beta, tau] : cases) {
        auto [lhs, rhs] = rogers_fine_sides(alpha, beta, tau, order);
        std::ostringstream label;
        label << "rogers-fine(alpha=" << alpha.coeff << "q^" << alpha.q_power
              << ",beta=" << beta.coeff << "q^" << beta.q_power
              << ",tau=" << tau.coeff << "q^" << tau.q_power << ")";
        CheckResult result = compare_series(label.str(), lhs, rhs);
        if (!result.pass) return result;
    }
    return {"rogers-fine", true,
            std::to_string(cases.size()) + " specializations to order " +
                std::to_string(order)};
}

CheckResult check_jacobi(const CheckParams& params) {
    long long order = params.order.value_or(50);
    const std::vector<std::array<Monomial, 2>> cases = {
        {Monomial{1, 1}, Monomial{1, 3}},
        {Monomial{-1, 1}, Monomial{-1, 3}},
        {Monomial{1, 1}, Monomial{1, 2}},
        {Monomial{2, 1}, Monomial{1, 2}},
        {Monomial{-1, 2}, Monomial{-1, 5}},
    };
    for (const auto& [a, b] : cases) {
        auto [lhs, rhs] = jacobi_triple_sides(a, b, order);
        std::ostringstream label;
        label << "jacobi(a=" << a.coeff << "q^" << a.q_power
              << ",b=" << b.coeff << "q^" << b.q_power << ")";
        CheckResult result = compare_series(label.str(), lhs, rhs);
        if (!result.pass) return result;
    }
    return {"jacobi", true,
            std::to_string(cases.size()) + " monomial pairs to order " +
                std::to_string(order)};
}

CheckResult check_alladi(const CheckParams& params) {
    long long order = params.order.value_or(30);
    auto [lhs, rhs] = alladi_sides(order);
    return compare_weighted("alladi", lhs, rhs);
}

CheckResult check_generalized_expansion(const CheckParams& params) {
    long long order = params.order.value_or(30);
    std::vector<long long> svals;
    if (params.s)
        svals.push_back(*params.s);
    else
        svals = {4, 6, 8};
    for (long long s : svals) {
        WeightedSeries lhs = duplicate_refined_lhs(s, order);
        WeightedSeries displayed =
            duplicate_refined_rhs(s, order, RhsDenominators::Displayed);
        WeightedSeries cases =
            duplicate_refined_rhs(s, order, RhsDenominators::CaseByCase);
        std::string label = "generalized-expansion(s=" + std::to_string(s) + ")";
        CheckResult result = compare_weighted(label, lhs, displayed);
        if (!result.pass) return result;
        result = compare_weighted(label + " case form", lhs, cases);
        if (!result.pass) return result;
    }
    return {"generalized-expansion", true,
            "both bracket forms equal the product to order " +
                std::to_string(order)};
}

CheckResult check_over_forms(const CheckParams& params) {
    long long order = params.order.value_or(60);
    std::vector<long long> svals;
    if (params.s)
        svals.push_back(*params.s);
    else
        svals = {4, 6, 8};
    for (long long s : svals)
        for (OverKind kind :
             {OverKind::Modular, OverKind::Congruent, OverKind::Duplicate}) {
            TruncatedSeries first =
                over_genfun(kind, s, ProductForm::First, order);
            TruncatedSeries second =
                over_genfun(kind, s, ProductForm::Second, order);
            std::string label = "over-forms(s=" + std::to_string(s) + ")";
            CheckResult result = compare_series(label, first, second);
            if (!result.pass) return result;
        }
    return {"over-forms", true,
            "both product forms equal to order " + std::to_string(order)};
}

CheckResult check_merca(const CheckParams& params) {
    long long max_n = params.max_n.value_or(50);
    std::vector<BigInt> congruent4 = c4_sequence(max_n);
    for (long long n = 0; n <= max_n; ++n) {
        BigInt ped_count = count(n, ClassSpec::ped());
        BigInt relation = 0;
        for (long long k = 0;; ++k) {
            long long shift = k * (k + 1); /* 2 T_k */
            if (shift > n) break;
            relation += congruent4[static_cast<size_t>(n - shift)];
        }
        if (ped_count != relation) {
            std::ostringstream detail;
            detail << "fails at n=" << n << ": ped=" << ped_count
                   << " sum=" << relation;
            return {"merca", false, detail.str()};
        }
    }
    return {"merca", true, "holds for n <= " + std::to_string(max_n)};
}

CheckResult check_andrews_vw(const CheckParams& params) {
    long long max_n = params.max_n.value_or(30);
    std::vector<long long> tvals;
    if (params.t)
        tvals.push_back(*params.t);
    else
        tvals = {3, 5};
    for (long long t : tvals) {
        if (t % 2 == 0 || t < 3)
            return {"andrews-vw", false, "t must be odd and >= 3"};
        ClassSpec cd = ClassSpec::congruent_distinct(4, t);
        ClassSpec v = ClassSpec::v_class(t, (t + 1) / 2);
        ClassSpec w = ClassSpec::w_class(t, (t + 1) / 2);
        TruncatedSeries product = class_genfun(cd, max_n);
        for (long long n = 0; n <= max_n; ++n) {
            BigInt by_mult = count(n, cd);
            BigInt by_residue = count(n, v);
            BigInt by_difference = count(n, w);
            if (by_mult != by_residue || by_mult != by_difference ||
                product.coeff(n) != by_mult) {
                std::ostringstream detail;
                detail << "t=" << t << " n=" << n << ": product "
                       << product.coeff(n) << ", multiplicity filter "
                       << by_mult << ", residue filter " << by_residue
                       << ", difference filter " << by_difference;
                return {"andrews-vw", false, detail.str()};
            }
        }
    }
    return {"andrews-vw", true,
            "three routes agree for n <= " + std::to_string(max_n)};
}

CheckResult check_equinumerosity(const CheckParams& params) {
    long long max_n = params.max_n.value_or(30);
    std::vector<long long> svals;
    if (params.s)
        svals.push_back(*params.s);
    else
        svals = {4, 6, 8, 10, 12};
    for (long long s : svals) {
        TruncatedSeries modular_gf =
            class_genfun(ClassSpec::modular(s), max_n);
        TruncatedSeries congruent_gf =
            class_genfun(ClassSpec::congruent(s), max_n);
        TruncatedSeries duplicate_gf =
            class_genfun(ClassSpec::duplicate(s), max_n);
        CountTable m = modular_table(s, max_n, max_n);
        CongruentTable c = congruent_table(s, max_n, max_n);
        CountTable d = duplicate_table(s, max_n, max_n);
        for (long long n = 0; n <= max_n; ++n) {
            BigInt by_oracle_m = count(n, ClassSpec::modular(s));
            BigInt by_oracle_c = count(n, ClassSpec::congruent(s));
            BigInt by_oracle_d = count(n, ClassSpec::duplicate(s));
            bool same = by_oracle_m == by_oracle_c &&
                        by_oracle_m == by_oracle_d &&
                        by_oracle_m == modular_gf.coeff(n) &&
                        by_oracle_m == congruent_gf.coeff(n) &&
                        by_oracle_m == duplicate_gf.coeff(n) &&
                        by_oracle_m == m.row_sum(n) &&
                        by_oracle_m == c.totals().row_sum(n) &&
                        by_oracle_m == d.row_sum(n);
            if (!same) {
                std::ostringstream detail;
                detail << "s=" << s << " n=" << n << ": oracle ("
                       << by_oracle_m << "," << by_oracle_c << ","
                       << by_oracle_d << "), series ("
                       << modular_gf.coeff(n) << "," << congruent_gf.coeff(n)
                       << "," << duplicate_gf.coeff(n) << "), recurrence ("
                       << m.row_sum(n) << "," << c.totals().row_sum(n) << ","
                       << d.row_sum(n) << ")";
                return {"equinumerosity", false, detail.str()};
            }
        }
    }
    return {"equinumerosity", true,
            "three engines agree for n <= " + std::to_string(max_n)};
}

CheckResult check_congruence_spot(const CheckParams& params) {
    long long order = params.order.value_or(700);
    TruncatedSeries series = class_genfun(ClassSpec::duplicate(4), order);
    struct Spot {
        long long n;
        long long modulus;
    };
    const std::vector<Spot> spots = {
        {135 * 0 + 8, 5},   {135 * 1 + 8, 5},  {135 * 0 + 107, 5},
        {135 * 1 + 107, 5}, {567 * 0 + 260, 7}, {675 * 0 + 647, 25},
    };
    for (const Spot& spot : spots) {
        if (spot.n > order)
            return {"congruence-spot", false,
                    "order too small for n=" + std::to_string(spot.n)};
        if (series.coeff(spot.n) % spot.modulus != 0) {
            std::ostringstream detail;
            detail << "count(" << spot.n << ") = " << series.coeff(spot.n)
                   << " not divisible by " << spot.modulus;
            return {"congruence-spot", false, detail.str()};
        }
    }
    return {"congruence-spot", true,
            std::to_string(spots.size()) + " finite instances hold"};
}

using Runner = std::function<CheckResult(const CheckParams&)>;

const std::map<std::string, Runner>& registry() {
    static const std::map<std::string, Runner> checks = {
        {"gauss", check_gauss},
        {"pentagonal", check_pentagonal},
        {"lebesgue", check_lebesgue},
        {"sylvester", check_sylvester},
        {"rogers-fine", check_rogers_fine},
        {"jacobi", check_jacobi},
        {"alladi", check_alladi},
        {"generalized-expansion", check_generalized_expansion},
        {"over-forms", check_over_forms},
        {"merca", check_merca},
        {"andrews-vw", check_andrews_vw},
        {"equinumerosity", check_equinumerosity},
        {"congruence-spot", check_congruence_spot},
    };
    return checks;
}

} // namespace

std::vector<std::string> check_names() {
    std::vector<std::string> names;
    for (const auto& [name, runner] : registry()) names.push_back(name);
    return names;
}

CheckResult run_check(const std::string& name, const CheckParams& params) {
    auto it = registry().find(name);
    if (it == registry().end())
        throw std::invalid_argument("unknown check: " + name);
    return it->second(params);
}

} // namespace qpart
