#include "qpart/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace qpart {

Partition Partition::from_entries(std::vector<Entry> entries) {
    for (const Entry& e : entries) {
        if (e.part <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (e.mult < 0)
            throw std::invalid_argument("multiplicities must be nonnegative");
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.part > b.part; });
    Partition p;
    for (const Entry& e : entries) {
        if (e.mult == 0) continue;
        if (!p.entries_.empty() && p.entries_.back().part == e.part)
            p.entries_.back().mult += e.mult;
        else
            p.entries_.push_back(e);
    }
    return p;
}

Partition Partition::from_parts(const std::vector<long long>& parts) {
    std::vector<Entry> entries;
    entries.reserve(parts.size());
    for (long long part : parts) entries.push_back({part, 1});
    return from_entries(std::move(entries));
}

Partition Partition::parse(std::string_view text) {
    std::string compact;
    compact.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);

    std::vector<Entry> entries;
    if (compact.empty() || compact == "0" || compact == "()")
        return Partition{};

    size_t pos = 0;
    auto read_number = [&]() -> long long {
        long long value = 0;
        const char* begin = compact.data() + pos;
        const char* end = compact.data() + compact.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr == begin)
            throw std::invalid_argument("bad partition literal: " +
                                        std::string(text));
        pos += static_cast<size_t>(ptr - begin);
        return value;
    };

    while (true) {
        Entry e;
        e.part = read_number();
        e.mult = 1;
        if (pos < compact.size() && compact[pos] == '^') {
            ++pos;
            e.mult = read_number();
            if (e.mult <= 0)
                throw std::invalid_argument("multiplicity must be positive: " +
                                            std::string(text));
        }
        entries.push_back(e);
        if (pos == compact.size()) break;
        if (compact[pos] != ',')
            throw std::invalid_argument("bad partition literal: " +
                                        std::string(text));
        ++pos;
    }
    return from_entries(std::move(entries));
}

long long Partition::weight() const {
    long long total = 0;
    for (const Entry& e : entries_) total += e.part * e.mult;
    return total;
}

long long Partition::length() const {
    long long total = 0;
    for (const Entry& e : entries_) total += e.mult;
    return total;
}

std::vector<long long> Partition::parts_with_repetition() const {
    std::vector<long long> parts;
    parts.reserve(static_cast<size_t>(length()));
    for (const Entry& e : entries_)
        for (long long i = 0; i < e.mult; ++i) parts.push_back(e.part);
    return parts;
}

std::string Partition::str() const {
    if (entries_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(entries_[i].part);
        if (entries_[i].mult > 1) {
            out.push_back('^');
            out += std::to_string(entries_[i].mult);
        }
    }
    return out;
}

bool Partition::lex_greater(const Partition& a, const Partition& b) {
    return a.parts_with_repetition() > b.parts_with_repetition();
}

namespace {

void descend(long long remaining, long long max_part,
             std::vector<long long>& acc,
             const std::function<void(const Partition&)>& visit) {
    if (remaining == 0) {
        visit(Partition::from_parts(acc));
        return;
    }
    for (long long part = std::min(max_part, remaining); part >= 1; --part) {
        acc.push_back(part);
        descend(remaining - part, part, acc, visit);
        acc.pop_back();
    }
}

void descend_fixed_length(long long remaining, long long count,
                          long long max_part, std::vector<long long>& acc,
                          const std::function<void(const Partition&)>& visit) {
    if (count == 0) {
        if (remaining == 0) visit(Partition::from_parts(acc));
        return;
    }
    /* Each of the remaining `count` parts is between 1 and max_part and the
     * largest must cover at least the average. */
    long long hi = std::min(max_part, remaining - (count - 1));
    long long lo = (remaining + count - 1) / count;
    for (long long part = hi; part >= lo && part >= 1; --part) {
        acc.push_back(part);
        descend_fixed_length(remaining - part, count - 1, part, acc, visit);
        acc.pop_back();
    }
}

} // namespace

void for_each_partition(long long n,
                        const std::function<void(const Partition&)>& visit) {
    if (n < 0) return;
    std::vector<long long> acc;
    descend(n, n, acc, visit);
}

void for_each_partition_with_length(
    long long n, long long k,
    const std::function<void(const Partition&)>& visit) {
    if (n < 0 || k < 0) return;
    if (k == 0) {
        if (n == 0) visit(Partition{});
        return;
    }
    std::vector<long long> acc;
    descend_fixed_length(n, k, n, acc, visit);
}

std::vector<Partition> all_partitions(long long n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<Partition> all_partitions_with_length(long long n, long long k) {
    std::vector<Partition> out;
    for_each_partition_with_length(
        n, k, [&](const Partition& p) { out.push_back(p); });
    return out;
}

} // namespace qpart
