#include "qpart/overpartitions.hpp"

namespace qpart {

long long Overpartition::weight() const {
    long long total = 0;
    for (const Entry& e : entries) total += e.part * e.mult;
    return total;
}

std::string Overpartition::str() const {
    if (entries.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) out.push_back(',');
        const Entry& e = entries[i];
        if (e.overlined) {
            out += std::to_string(e.part);
            out.push_back('~');
            if (e.mult > 1) {
                out.push_back(',');
                out += std::to_string(e.part);
                if (e.mult > 2) {
                    out.push_back('^');
                    out += std::to_string(e.mult - 1);
                }
            }
        } else {
            out += std::to_string(e.part);
            if (e.mult > 1) {
                out.push_back('^');
                out += std::to_string(e.mult);
            }
        }
    }
    return out;
}

void for_each_overpartition(
    long long n, const std::function<void(const Overpartition&)>& visit) {
    for_each_partition(n, [&](const Partition& p) {
        const auto& entries = p.entries();
        const size_t distinct = entries.size();
        for (unsigned long long mask = 0; mask < (1ULL << distinct); ++mask) {
            Overpartition op;
            op.entries.reserve(distinct);
            for (size_t i = 0; i < distinct; ++i)
                op.entries.push_back({entries[i].part, entries[i].mult,
                                      (mask >> i & 1ULL) != 0});
            visit(op);
        }
    });
}

BigInt count_overpartitions(long long n) {
    if (n < 0) return 0;
    BigInt total = 0;
    for_each_partition(n, [&](const Partition& p) {
        total += BigInt(1) << p.entries().size();
    });
    return total;
}

} // namespace qpart
