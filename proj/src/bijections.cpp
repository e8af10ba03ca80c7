#include "qpart/bijections.hpp"

#include <stdexcept>

#include "qpart/classes.hpp"
#include "qpart/errors.hpp"

namespace qpart {

TwoAdicSplit two_adic_split(long long m) {
    if (m < 1) throw std::invalid_argument("two_adic_split needs m >= 1");
    TwoAdicSplit split{0, m};
    while (split.ell % 2 == 0) {
        split.ell /= 2;
        ++split.r;
    }
    return split;
}

namespace {

using Entry = Partition::Entry;
using Image = std::vector<Entry>;

bool is_power_of_two(long long s) { return (s & (s - 1)) == 0; }

/* Residues 2, 4, ..., s-2: even and not divisible by s. */
bool forbidden_residue(long long part, long long s) {
    return part % 2 == 0 && part % s != 0;
}

/* Zero parts and zero multiplicities are the excluded degenerate images
 * of the rule tables (for instance the (mult-1)-sized block at mult 1). */
void push(Image& image, long long part, long long mult) {
    if (part > 0 && mult > 0) image.push_back({part, mult});
}

/* --- power-of-two regime, modular -> congruent ----------------------- */
Image map_pow2_to_congruent(long long part, long long mult, long long s,
                            std::string& rule) {
    if (forbidden_residue(part, s)) {
        if (mult % s == 0) {
            rule = "residue part, mult=0 (mod s): part^mult -> mult^part";
            Image image;
            push(image, mult, part);
            return image;
        }
        if (mult % s == 1) {
            rule = "residue part, mult=1 (mod s): split off one copy as "
                   "odd^(2^r)";
            auto [r, ell] = two_adic_split(part);
            Image image;
            push(image, mult - 1, part);
            push(image, ell, 1LL << r);
            return image;
        }
        throw InternalCaseGap("unmapped multiplicity in pow2 congruent map");
    }
    rule = "part in an allowed residue: unchanged";
    return {{part, mult}};
}

/* --- power-of-two regime, congruent -> modular ------------------------ */
Image map_pow2_from_congruent(long long part, long long mult, long long s,
                              std::string& rule) {
    if (part % s == 0) {
        long long r = mult % s;
        if (r == 0 || r == 1) {
            rule = "multiple-of-s part, mult=0,1 (mod s): unchanged";
            return {{part, mult}};
        }
        if (r % 2 == 0) {
            rule = "multiple-of-s part, even mult: part^mult -> mult^part";
            Image image;
            push(image, mult, part);
            return image;
        }
        rule = "multiple-of-s part, odd mult: (mult-1)^part plus one part";
        Image image;
        push(image, mult - 1, part);
        push(image, part, 1);
        return image;
    }
    if (mult % s == 0 || mult % s == 1) {
        rule = "mult=0,1 (mod s): unchanged";
        return {{part, mult}};
    }
    /* Search the bit vectors (a_1..a_{p-1}); |W| = sum 2^j a_j is even and
     * exactly one choice leaves m = mult - |W| >= 0 with m = 0,1 (mod s).
     * The leftover becomes parts part*2^j, one per set bit. */
    long long p = 0;
    while ((1LL << p) < s) ++p;
    long long best_mask = -1;
    long long best_m = -1;
    int valid = 0;
    for (long long mask = 0; mask < (1LL << (p - 1)); ++mask) {
        long long w = 2 * mask;
        long long m = mult - w;
        if (m < 0) continue;
        if (m % s != 0 && m % s != 1) continue;
        ++valid;
        if (m > best_m) {
            best_m = m;
            best_mask = mask;
        }
    }
    if (valid == 0)
        throw NoValidChoice("no bit vector yields an admissible leftover");
    if (valid > 1)
        throw std::logic_error("leftover multiplicity maximizer not unique");
    rule = "split mult into a 0,1 (mod s) block plus binary parts";
    Image image;
    push(image, part, best_m);
    for (long long j = 1; j < p; ++j)
        if (best_mask & (1LL << (j - 1))) push(image, part * (1LL << j), 1);
    return image;
}

/* --- power-of-two regime, modular -> duplicate ------------------------ */
Image map_pow2_to_duplicate(long long part, long long mult, long long s,
                            std::string& rule) {
    const long long half = s / 2;
    if (part % half == 0 || mult == 1) {
        rule = "multiple of s/2 or single occurrence: unchanged";
        return {{part, mult}};
    }
    long long r = mult % s;
    if (r != 0 && r != 1)
        throw InternalCaseGap("unmapped multiplicity in pow2 duplicate map");
    /* mult = b0 + s*(binary blocks); block s*2^j collapses to a pair of
     * halves for odd parts, a quadruple of quarters for even parts. */
    rule = "binary blocks of the multiplicity collapse onto s/2-multiples";
    long long b0 = r;
    long long blocks = (mult - b0) / s;
    Image image;
    push(image, part, b0);
    for (long long j = 0; blocks >> j; ++j) {
        if (!((blocks >> j) & 1)) continue;
        long long block = s << j;
        if (part % 2 == 1)
            push(image, block * part / 2, 2);
        else
            push(image, block * part / 4, 4);
    }
    return image;
}

/* --- power-of-two regime, duplicate -> modular ------------------------ */
Image map_pow2_from_duplicate(long long part, long long mult, long long s,
                              std::string& rule) {
    const long long half = s / 2;
    if (part % half != 0) {
        if (mult == 1) {
            rule = "single occurrence off the s/2 lattice: unchanged";
            return {{part, mult}};
        }
        throw PreconditionViolated("repeated part not divisible by s/2");
    }
    long long r = mult % s;
    if (r == 0 || r == 1) {
        rule = "mult=0,1 (mod s): unchanged";
        return {{part, mult}};
    }
    /* Peel n in {2,4} copies so the rest is 0,1 (mod s); the peeled
     * weight re-expands as (n*ell/2)^(2^{r+1}) from part = 2^r * ell. */
    for (long long n : {2LL, 4LL}) {
        long long rest = mult - n;
        if (rest < 0) continue;
        if (rest % s != 0 && rest % s != 1) continue;
        rule = "peel " + std::to_string(n) + " copies back to binary parts";
        auto [r2, ell] = two_adic_split(part);
        Image image;
        push(image, part, rest);
        push(image, n * ell / 2, 1LL << (r2 + 1));
        return image;
    }
    throw NoValidChoice("no peel size yields multiplicity 0,1 (mod s)");
}

/* --- general regime, modular -> congruent ----------------------------- */
Image map_general_to_congruent(long long part, long long mult, long long s,
                               std::string& rule) {
    if (forbidden_residue(part, s)) {
        if (mult % s == 0) {
            rule = "residue part, mult=0 (mod s): part^mult -> mult^part";
            Image image;
            push(image, mult, part);
            return image;
        }
        if (mult % s == 1) {
            rule = "residue part, mult=1 (mod s): split off one copy as "
                   "odd^(2^r)";
            auto [r, ell] = two_adic_split(part);
            Image image;
            push(image, mult - 1, part);
            push(image, ell, 1LL << r);
            return image;
        }
        throw InternalCaseGap("unmapped multiplicity in general congruent map");
    }
    if (mult % s == 0) {
        rule = "allowed part, mult=0 (mod s): bundle into (s*part/2)^(2m/s)";
        Image image;
        push(image, s * part / 2, 2 * mult / s);
        return image;
    }
    if (mult % s == 1) {
        rule = "allowed part, mult=1 (mod s): bundle all but one copy";
        Image image;
        push(image, s * part / 2, 2 * (mult - 1) / s);
        push(image, part, 1);
        return image;
    }
    throw InternalCaseGap("unmapped multiplicity in general congruent map");
}

/* --- general regime, congruent -> modular ----------------------------- */
Image map_general_from_congruent(long long part, long long mult, long long s,
                                 std::string& rule) {
    if (part % s == 0) {
        if (mult % 2 == 0) {
            rule = "multiple-of-s part, even mult: part^mult -> mult^part";
            Image image;
            push(image, mult, part);
            return image;
        }
        rule = "multiple-of-s part, odd mult: (mult-1)^part plus one part";
        Image image;
        push(image, mult - 1, part);
        push(image, part, 1);
        return image;
    }
    const bool on_half_lattice = part > 1 && part % (s / 2) == 0;
    if (on_half_lattice) {
        long long ell = 2 * part / s;
        if (mult % 2 == 1) {
            rule = "odd mult on the s/2 lattice: unbundle to ell^((m-1)s/2)";
            Image image;
            push(image, ell, (mult - 1) * s / 2);
            push(image, part, 1);
            return image;
        }
        rule = "even mult on the s/2 lattice: unbundle to ell^(m*s/2)";
        Image image;
        push(image, ell, mult * s / 2);
        return image;
    }
    /* Off the lattice the multiplicity regroups by its binary expansion:
     * each high bit came from one even source part 2^j * part, the low bit
     * from a single kept copy. A flat (mult-1)*part or mult*part image
     * would not invert merged pieces such as part^6 = part^2 u part^4. */
    rule = "off the lattice: regroup by the binary expansion of the mult";
    Image image;
    for (long long j = 0; mult >> j; ++j)
        if ((mult >> j) & 1)
            push(image, part * (1LL << j), 1);
    return image;
}

/* --- general regime, modular -> duplicate ----------------------------- */
/* Every repeated part bundles, whatever its residue; a single occurrence
 * is the degenerate bundle and stays put. Restricting the bundling to
 * parts off the s/2 lattice would send both 1^18 and 3^6 to 3^6 at s = 6
 * and could not be inverted. */
Image map_general_to_duplicate(long long part, long long mult, long long s,
                               std::string& rule) {
    if (mult > 1) {
        if (mult % s == 0) {
            rule = "repeated part: bundle to (s*part/2)^(2m/s)";
            Image image;
            push(image, s * part / 2, 2 * mult / s);
            return image;
        }
        if (mult % s == 1) {
            rule = "repeated part: bundle all but one copy";
            Image image;
            push(image, s * part / 2, 2 * (mult - 1) / s);
            push(image, part, 1);
            return image;
        }
        throw InternalCaseGap("unmapped multiplicity in general duplicate map");
    }
    rule = "single occurrence: unchanged";
    return {{part, mult}};
}

/* --- general regime, duplicate -> modular ----------------------------- */
Image map_general_from_duplicate(long long part, long long mult, long long s,
                                 std::string& rule) {
    if (part % (s / 2) == 0 && mult > 1) {
        long long ell = 2 * part / s;
        if (mult % 2 == 0) {
            rule = "even mult on the s/2 lattice: unbundle to ell^(m*s/2)";
            Image image;
            push(image, ell, mult * s / 2);
            return image;
        }
        rule = "odd mult on the s/2 lattice: unbundle to ell^((m-1)s/2)";
        Image image;
        push(image, ell, (mult - 1) * s / 2);
        push(image, part, 1);
        return image;
    }
    rule = "single occurrence or off the lattice: unchanged";
    return {{part, mult}};
}

using PartMap = Image (*)(long long, long long, long long, std::string&);

Partition apply_map(const Partition& p, long long s, PartMap pow2_map,
                    PartMap general_map, const ClassSpec& source,
                    const ClassSpec& target,
                    std::vector<TraceStep>* trace) {
    if (s < 4 || s % 2 != 0)
        throw std::invalid_argument("s must be an even integer >= 4");
    if (!is_member(p, source))
        throw PreconditionViolated(p.str() + " is not in " + source.name());
    PartMap part_map = is_power_of_two(s) ? pow2_map : general_map;
    std::vector<Entry> merged;
    for (const Entry& e : p.entries()) {
        std::string rule;
        Image image = part_map(e.part, e.mult, s, rule);
        if (trace) trace->push_back({e.part, e.mult, rule, image});
        merged.insert(merged.end(), image.begin(), image.end());
    }
    Partition result = Partition::from_entries(std::move(merged));
    if (result.weight() != p.weight())
        throw PostconditionViolated("weight not preserved mapping " + p.str());
    if (!is_member(result, target))
        throw PostconditionViolated("image " + result.str() + " of " +
                                    p.str() + " is not in " + target.name());
    return result;
}

} // namespace

Partition to_congruent(const Partition& p, long long s,
                       std::vector<TraceStep>* trace) {
    return apply_map(p, s, map_pow2_to_congruent, map_general_to_congruent,
                     ClassSpec::modular(s), ClassSpec::congruent(s), trace);
}

Partition from_congruent(const Partition& p, long long s,
                         std::vector<TraceStep>* trace) {
    return apply_map(p, s, map_pow2_from_congruent,
                     map_general_from_congruent, ClassSpec::congruent(s),
                     ClassSpec::modular(s), trace);
}

Partition to_duplicate(const Partition& p, long long s,
                       std::vector<TraceStep>* trace) {
    return apply_map(p, s, map_pow2_to_duplicate, map_general_to_duplicate,
                     ClassSpec::modular(s), ClassSpec::duplicate(s), trace);
}

Partition from_duplicate(const Partition& p, long long s,
                         std::vector<TraceStep>* trace) {
    return apply_map(p, s, map_pow2_from_duplicate,
                     map_general_from_duplicate, ClassSpec::duplicate(s),
                     ClassSpec::modular(s), trace);
}

} // namespace qpart
