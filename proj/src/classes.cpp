#include "qpart/classes.hpp"

#include <set>
#include <stdexcept>

namespace qpart {

namespace {

void require(bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
}

void require_even_s(long long s) {
    require(s >= 4 && s % 2 == 0, "s must be an even integer >= 4");
}

/* Residues 2, 4, ..., s-2 are exactly the even nonzero residues mod s. */
bool in_forbidden_even_residue(long long part, long long s) {
    return part % 2 == 0 && part % s != 0;
}

} // namespace

ClassSpec ClassSpec::modular(long long s) {
    require_even_s(s);
    return {Kind::Modular, s, 0, 0, 0};
}

ClassSpec ClassSpec::congruent(long long s) {
    require_even_s(s);
    return {Kind::Congruent, s, 0, 0, 0};
}

ClassSpec ClassSpec::duplicate(long long s) {
    require_even_s(s);
    return {Kind::Duplicate, s, 0, 0, 0};
}

ClassSpec ClassSpec::congruent_distinct(long long s, long long t) {
    require_even_s(s);
    require(t >= 2, "t must be >= 2");
    return {Kind::CongruentDistinct, s, t, 0, 0};
}

ClassSpec ClassSpec::e_class(long long s, long long t) {
    require_even_s(s);
    require(t >= 3, "t must be >= 3");
    require(!in_forbidden_even_residue(t, s),
            "t must not be congruent to 2,4,...,s-2 (mod s)");
    return {Kind::EClass, s, t, 0, 0};
}

ClassSpec ClassSpec::v_class(long long k, long long i) {
    require(k > 0 && i > 0 && i <= k, "need 0 < i <= k");
    return {Kind::VClass, 0, 0, k, i};
}

ClassSpec ClassSpec::w_class(long long k, long long i) {
    require(k > 0 && i > 0 && i <= k, "need 0 < i <= k");
    return {Kind::WClass, 0, 0, k, i};
}

ClassSpec ClassSpec::pod() { return {Kind::Pod, 0, 0, 0, 0}; }
ClassSpec ClassSpec::ped() { return {Kind::Ped, 0, 0, 0, 0}; }
ClassSpec ClassSpec::unrestricted() { return {Kind::Unrestricted, 0, 0, 0, 0}; }
ClassSpec ClassSpec::two_part_duplicate4() {
    return {Kind::TwoPartDuplicate4, 0, 0, 0, 0};
}

std::string ClassSpec::name() const {
    switch (kind_) {
        case Kind::Modular: return "modular(" + std::to_string(s_) + ")";
        case Kind::Congruent: return "congruent(" + std::to_string(s_) + ")";
        case Kind::Duplicate: return "duplicate(" + std::to_string(s_) + ")";
        case Kind::CongruentDistinct:
            return "congruent-distinct(" + std::to_string(s_) + "," +
                   std::to_string(t_) + ")";
        case Kind::EClass:
            return "eclass(" + std::to_string(s_) + "," + std::to_string(t_) +
                   ")";
        case Kind::VClass:
            return "vclass(" + std::to_string(k_) + "," + std::to_string(i_) +
                   ")";
        case Kind::WClass:
            return "wclass(" + std::to_string(k_) + "," + std::to_string(i_) +
                   ")";
        case Kind::Pod: return "pod";
        case Kind::Ped: return "ped";
        case Kind::Unrestricted: return "unrestricted";
        case Kind::TwoPartDuplicate4: return "two-part-duplicate(4)";
    }
    return "?";
}

namespace {

bool member_modular(const Partition& p, long long s) {
    for (const auto& e : p.entries()) {
        long long r = e.mult % s;
        if (r != 0 && r != 1) return false;
    }
    return true;
}

bool member_congruent(const Partition& p, long long s) {
    for (const auto& e : p.entries())
        if (in_forbidden_even_residue(e.part, s)) return false;
    return true;
}

bool member_duplicate(const Partition& p, long long s) {
    for (const auto& e : p.entries())
        if (e.mult > 1 && e.part % (s / 2) != 0) return false;
    return true;
}

bool member_e_class(const Partition& p, long long s, long long t) {
    long long ts = t * s;
    std::set<long long> bad;
    bad.insert(0);
    for (long long r = 0; r < s / 2; ++r) bad.insert((t * (2 * r + 1)) % ts);
    for (const auto& e : p.entries()) {
        if (in_forbidden_even_residue(e.part, s)) return false;
        if (bad.count(e.part % ts)) return false;
    }
    return true;
}

bool member_v_class(const Partition& p, long long k, long long i) {
    long long m = 4 * k;
    long long a = (2 * i - 1) % m;
    for (const auto& e : p.entries()) {
        if (e.part % 4 == 2) return false;
        long long r = e.part % m;
        if (r == 0 || r == a || r == m - a) return false;
    }
    return true;
}

bool member_w_class(const Partition& p, long long k, long long i) {
    for (const auto& e : p.entries())
        if (e.part % 2 == 1 && e.mult > 1) return false;
    const std::vector<long long> parts = p.parts_with_repetition();
    for (size_t j = 0; j + static_cast<size_t>(k) - 1 < parts.size(); ++j) {
        long long diff = parts[j] - parts[j + static_cast<size_t>(k) - 1];
        if (parts[j] % 2 == 1 ? diff < 2 : diff <= 2) return false;
    }
    long long small = 0;
    for (const auto& e : p.entries())
        if (e.part <= 2) small += e.mult;
    return small <= i - 1;
}

bool member_pod(const Partition& p) {
    for (const auto& e : p.entries())
        if (e.part % 2 == 1 && e.mult > 1) return false;
    return true;
}

bool member_ped(const Partition& p) {
    for (const auto& e : p.entries())
        if (e.part % 2 == 0 && e.mult > 1) return false;
    return true;
}

} // namespace

bool is_member(const Partition& p, const ClassSpec& c) {
    switch (c.kind()) {
        case ClassSpec::Kind::Modular: return member_modular(p, c.s());
        case ClassSpec::Kind::Congruent: return member_congruent(p, c.s());
        case ClassSpec::Kind::Duplicate: return member_duplicate(p, c.s());
        case ClassSpec::Kind::CongruentDistinct: {
            if (!member_congruent(p, c.s())) return false;
            for (const auto& e : p.entries())
                if (e.mult >= c.t()) return false;
            return true;
        }
        case ClassSpec::Kind::EClass: return member_e_class(p, c.s(), c.t());
        case ClassSpec::Kind::VClass: return member_v_class(p, c.k(), c.i());
        case ClassSpec::Kind::WClass: return member_w_class(p, c.k(), c.i());
        case ClassSpec::Kind::Pod: return member_pod(p);
        case ClassSpec::Kind::Ped: return member_ped(p);
        case ClassSpec::Kind::Unrestricted: return true;
        case ClassSpec::Kind::TwoPartDuplicate4:
            return p.length() == 2 && member_duplicate(p, 4);
    }
    return false;
}

BigInt count(long long n, const ClassSpec& c) {
    if (n < 0) return 0;
    BigInt total = 0;
    for_each_partition(n, [&](const Partition& p) {
        if (is_member(p, c)) ++total;
    });
    return total;
}

BigInt count_with_length(long long n, long long k, const ClassSpec& c) {
    if (n < 0 || k < 0) return 0;
    BigInt total = 0;
    for_each_partition_with_length(n, k, [&](const Partition& p) {
        if (is_member(p, c)) ++total;
    });
    return total;
}

std::map<std::pair<long long, long long>, BigInt>
refined_duplicate_counts(long long n, long long s) {
    ClassSpec spec = ClassSpec::duplicate(s);
    std::map<std::pair<long long, long long>, BigInt> counts;
    if (n < 0) return counts;
    for_each_partition(n, [&](const Partition& p) {
        if (!is_member(p, spec)) return;
        long long r = p.length();
        long long l = 0;
        for (const auto& e : p.entries())
            if (e.part % (s / 2) != 0) l += e.mult;
        ++counts[{r, l}];
    });
    return counts;
}

std::pair<std::vector<BigInt>, std::vector<BigInt>>
sylvester_weight_polynomials(long long n) {
    std::vector<BigInt> distinct_side;
    std::vector<BigInt> gap_side;
    auto bump = [](std::vector<BigInt>& poly, size_t degree, const BigInt& v) {
        if (poly.size() <= degree) poly.resize(degree + 1);
        poly[degree] += v;
    };
    for_each_partition(n, [&](const Partition& p) {
        bool distinct = true;
        for (const auto& e : p.entries())
            if (e.mult > 1) distinct = false;
        if (!distinct) return;

        size_t len = static_cast<size_t>(p.length());
        bump(distinct_side, len, 1);

        const std::vector<long long> parts = p.parts_with_repetition();
        bool gaps_ok = true;
        for (size_t j = 0; j + 1 < parts.size(); ++j)
            if (parts[j] - parts[j + 1] < 3) gaps_ok = false;
        if (!gaps_ok) return;

        /* Count strict gaps > 3 against a sentinel -1 below the last part,
         * then expand c^len (1+c)^strict by binomials. */
        long long strict = 0;
        for (size_t j = 0; j < parts.size(); ++j) {
            long long next = (j + 1 < parts.size()) ? parts[j + 1] : -1;
            if (parts[j] - next > 3) ++strict;
        }
        BigInt binom = 1;
        for (long long j = 0; j <= strict; ++j) {
            bump(gap_side, len + static_cast<size_t>(j), binom);
            binom = binom * (strict - j) / (j + 1);
        }
    });
    return {distinct_side, gap_side};
}

} // namespace qpart
