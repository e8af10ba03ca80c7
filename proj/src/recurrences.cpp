#include "qpart/recurrences.hpp"

#include <stdexcept>

namespace qpart {

const BigInt CountTable::zero_ = 0;

CountTable::CountTable(ClassSpec::Kind kind, long long s, long long max_n,
                       long long max_k)
    : kind_(kind), s_(s), max_n_(max_n), max_k_(max_k),
      cells_(static_cast<size_t>((max_n + 1) * (max_k + 1))) {}

const BigInt& CountTable::cell(long long n, long long k) const {
    if (n < 0 || k < 0 || n > max_n_ || k > max_k_) return zero_;
    return cells_[static_cast<size_t>(n * (max_k_ + 1) + k)];
}

BigInt& CountTable::cell_mut(long long n, long long k) {
    return cells_[static_cast<size_t>(n * (max_k_ + 1) + k)];
}

BigInt CountTable::row_sum(long long n) const {
    BigInt total = 0;
    for (long long k = 0; k <= max_k_; ++k) total += cell(n, k);
    return total;
}

namespace {

void require_even_s(long long s) {
    if (s < 4 || s % 2 != 0)
        throw std::invalid_argument("s must be an even integer >= 4");
}

} // namespace

CountTable modular_table(long long s, long long max_n, long long max_k) {
    require_even_s(s);
    CountTable table(ClassSpec::Kind::Modular, s, max_n, max_k);
    table.cell_mut(0, 0) = 1;
    for (long long n = 1; n <= max_n; ++n) {
        for (long long k = 1; k <= max_k && k <= n; ++k) {
            BigInt acc = 0;
            for (long long l = 0; l <= k; ++l) {
                long long r = l % s;
                if (r != 0 && r != 1) continue;
                acc += table.cell(n - k, k - l);
            }
            table.cell_mut(n, k) = acc;
        }
    }
    return table;
}

CongruentTable::CongruentTable(long long s, long long max_n, long long max_k)
    : s_(s), totals_(ClassSpec::Kind::Congruent, s, max_n, max_k) {
    /* Layer order: 1, 3, ..., s-1, s, then the all-parts-greater-than-s
     * layer addressed as s+1. */
    for (long long l = 1; l <= s - 1; l += 2)
        layers_.emplace_back(ClassSpec::Kind::Congruent, s, max_n, max_k);
    layers_.emplace_back(ClassSpec::Kind::Congruent, s, max_n, max_k);
    layers_.emplace_back(ClassSpec::Kind::Congruent, s, max_n, max_k);
}

long long CongruentTable::index_of(long long l) const {
    if (l >= 1 && l < s_ && l % 2 == 1) return (l - 1) / 2;
    if (l == s_) return s_ / 2;
    if (l == s_ + 1) return s_ / 2 + 1;
    throw std::invalid_argument("no such layer");
}

const BigInt& CongruentTable::layer(long long l, long long n,
                                    long long k) const {
    return layers_[static_cast<size_t>(index_of(l))].cell(n, k);
}

CongruentTable congruent_table(long long s, long long max_n, long long max_k) {
    require_even_s(s);
    CongruentTable table(s, max_n, max_k);
    table.totals_.cell_mut(0, 0) = 1;

    std::vector<long long> smallest;
    for (long long l = 1; l <= s - 1; l += 2) smallest.push_back(l);
    smallest.push_back(s);

    for (long long n = 1; n <= max_n; ++n) {
        for (long long k = 1; k <= max_k && k <= n; ++k) {
            BigInt total = 0;
            /* Remove one smallest part l; partitions of n-l into k-1 parts
             * all of size >= l are those not led by a smaller layer. */
            for (long long l : smallest) {
                BigInt acc = table.totals_.cell(n - l, k - 1);
                for (long long i = 1; i < l; i += 2)
                    acc -= table.layer(i, n - l, k - 1);
                long long idx = table.index_of(l);
                table.layers_[static_cast<size_t>(idx)].cell_mut(n, k) = acc;
                total += acc;
            }
            /* All parts greater than s: strip s from each of the k parts. */
            BigInt tail = table.totals_.cell(n - s * k, k);
            table.layers_[static_cast<size_t>(table.index_of(s + 1))]
                .cell_mut(n, k) = tail;
            total += tail;
            table.totals_.cell_mut(n, k) = total;
        }
    }
    return table;
}

std::vector<Partition> alpha_set(long long s) {
    require_even_s(s);
    const long long top = s / 2 - 1;
    std::vector<Partition> out;
    for (long long mask = 0; mask < (1LL << top); ++mask) {
        std::vector<long long> parts;
        for (long long v = 1; v <= top; ++v)
            if (mask & (1LL << (v - 1))) parts.push_back(v);
        out.push_back(Partition::from_parts(parts));
    }
    return out;
}

CountTable duplicate_table(long long s, long long max_n, long long max_k) {
    require_even_s(s);
    const long long half = s / 2;
    const std::vector<Partition> alphas = alpha_set(s);
    CountTable table(ClassSpec::Kind::Duplicate, s, max_n, max_k);
    table.cell_mut(0, 0) = 1;
    for (long long n = 1; n <= max_n; ++n) {
        for (long long k = 1; k <= max_k && k <= n; ++k) {
            BigInt acc = table.cell(n - half, k - 1);
            for (const Partition& alpha : alphas) {
                long long len = alpha.length();
                if (len > k) continue;
                acc += table.cell(n - half * (k - len) - alpha.weight(),
                                  k - len);
            }
            table.cell_mut(n, k) = acc;
        }
    }
    return table;
}

std::vector<BigInt> c4_sequence(long long max_n) {
    std::vector<BigInt> seq(static_cast<size_t>(max_n) + 1);
    seq[0] = 1;
    for (long long n = 1; n <= max_n; ++n) {
        BigInt acc = 0;
        for (long long k = 1;; ++k) {
            long long t = k * (k + 1) / 2;
            if (t > n) break;
            if (t % 2 == 1)
                acc += seq[static_cast<size_t>(n - t)];
            else
                acc -= seq[static_cast<size_t>(n - t)];
        }
        seq[static_cast<size_t>(n)] = acc;
    }
    return seq;
}

BigInt c4_triangular(long long n) {
    if (n < 0) return 0;
    return c4_sequence(n).back();
}

BigInt d4_two_parts(long long n) {
    if (n <= 2) return 0;
    if (n == 3) return 1;
    if (n <= 6) return 2;
    /* f(n) = f(n-4) + 2 for n >= 7 */
    long long steps = (n - 3) / 4;
    long long base = n - 4 * steps;
    BigInt value = (base == 3) ? 1 : 2;
    return value + 2 * steps;
}

} // namespace qpart
