#include "qplab/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace qplab {

bool canonical_before(const ColoredPart& a, const ColoredPart& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.color == Color::blue && b.color == Color::green;
}

TwoColorPartition::TwoColorPartition(std::vector<ColoredPart> parts) : parts_(std::move(parts)) {
    for (const auto& p : parts_) {
        if (p.value == 0) throw std::invalid_argument("partition parts must be positive");
    }
    std::stable_sort(parts_.begin(), parts_.end(), canonical_before);
}

std::size_t TwoColorPartition::total() const {
    std::size_t sum = 0;
    for (const auto& p : parts_) sum += p.value;
    return sum;
}

std::size_t TwoColorPartition::count_even(std::optional<Color> color) const {
    return static_cast<std::size_t>(std::count_if(parts_.begin(), parts_.end(), [&](const ColoredPart& p) {
        return p.value % 2 == 0 && (!color || p.color == *color);
    }));
}

bool operator<(const TwoColorPartition& a, const TwoColorPartition& b) {
    return std::lexicographical_compare(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(),
                                        canonical_before);
}

std::string to_listing(const TwoColorPartition& p) {
    std::string out;
    for (const auto& part : p.parts()) {
        if (!out.empty()) out += '+';
        out += std::to_string(part.value);
        out += part.color == Color::blue ? 'b' : 'g';
    }
    return out;
}

TwoColorPartition parse_listing(std::string_view text) {
    std::vector<ColoredPart> parts;
    while (!text.empty()) {
        const auto plus = text.find('+');
        const std::string_view token = text.substr(0, plus);
        if (token.size() < 2) throw std::invalid_argument("malformed part '" + std::string(token) + "'");
        ColoredPart part;
        const char tag = token.back();
        if (tag == 'b') {
            part.color = Color::blue;
        } else if (tag == 'g') {
            part.color = Color::green;
        } else {
            throw std::invalid_argument("part color must be b or g in '" + std::string(token) + "'");
        }
        const auto digits = token.substr(0, token.size() - 1);
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), part.value);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || part.value == 0) {
            throw std::invalid_argument("malformed part value in '" + std::string(token) + "'");
        }
        parts.push_back(part);
        if (plus == std::string_view::npos) break;
        text.remove_prefix(plus + 1);
        if (text.empty()) throw std::invalid_argument("trailing '+' in partition listing");
    }
    return TwoColorPartition(std::move(parts));
}

namespace {

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

struct Slot {
    std::size_t value;
    Color color;
    std::size_t max_multiplicity;
};

// The optional parts available once the anchor (if any) has been placed.
struct Layout {
    std::vector<ColoredPart> forced;
    std::vector<Slot> slots;
    std::size_t forced_total = 0;
};

Layout layout_for(const FamilySpec& spec, std::size_t n, std::optional<std::size_t> smallest) {
    Layout layout;
    std::size_t low = 1;
    if (smallest) {
        const std::size_t s = *smallest;
        low = s;
        layout.forced.push_back({s, Color::blue});
        if (spec.anchor->colors == Anchor::Colors::both) layout.forced.push_back({s, Color::green});
        layout.forced_total = s * layout.forced.size();
    }
    for (std::size_t v = n; v >= low && v >= 1; --v) {
        for (Color c : {Color::blue, Color::green}) {
            const Parity parity = v % 2 ? Parity::odd : Parity::even;
            const CellRule& rule = spec.cell(c, parity);
            if (!rule.allowed) continue;
            std::size_t bound = 1;
            if (smallest) {
                const long long b = static_cast<long long>(*smallest) + rule.min_offset;
                bound = std::max<std::size_t>(*smallest, static_cast<std::size_t>(std::max(1LL, b)));
            }
            if (v < bound) continue;
            std::size_t max = rule.distinct ? 1 : kUnbounded;
            if (smallest && v == *smallest) {
                const bool forced_here =
                    c == Color::blue || spec.anchor->colors == Anchor::Colors::both;
                if (forced_here) {
                    const bool exactly_one = c == Color::blue && spec.anchor->blue_multiplicity ==
                                                                     Anchor::BlueMultiplicity::exactly_one_then_rule;
                    if (rule.distinct || exactly_one) max = 0;
                }
            }
            if (max > 0) layout.slots.push_back({v, c, max});
        }
        if (v == 1) break;
    }
    return layout;
}

std::vector<std::size_t> candidate_smallest(const FamilySpec& spec, std::size_t n) {
    std::vector<std::size_t> out;
    const std::size_t copies = spec.anchor->colors == Anchor::Colors::both ? 2 : 1;
    for (std::size_t s = 1; s * copies <= n; ++s) {
        const Parity parity = s % 2 ? Parity::odd : Parity::even;
        if (parity == spec.anchor->parity) out.push_back(s);
    }
    return out;
}

unsigned statistic_bits(std::size_t value, Color color) {
    unsigned bits = FamilyTally::kParts;
    if (value % 2 == 0) {
        bits |= FamilyTally::kEvenParts;
        if (color == Color::blue) bits |= FamilyTally::kEvenBlueParts;
    }
    return bits;
}

bool passes(const StatisticFilter& f, unsigned bits) {
    auto parity_of = [&](unsigned mask) { return (bits & mask) ? Parity::odd : Parity::even; };
    if (f.even_parts && parity_of(FamilyTally::kEvenParts) != *f.even_parts) return false;
    if (f.parts && parity_of(FamilyTally::kParts) != *f.parts) return false;
    return true;
}

void enumerate_slots(const Layout& layout, std::size_t index, std::size_t remaining, std::vector<ColoredPart>& chosen,
                     std::vector<TwoColorPartition>& out) {
    if (remaining == 0) {
        std::vector<ColoredPart> parts = layout.forced;
        parts.insert(parts.end(), chosen.begin(), chosen.end());
        out.emplace_back(std::move(parts));
        return;
    }
    if (index == layout.slots.size()) return;
    const Slot& slot = layout.slots[index];
    const std::size_t limit = std::min(slot.max_multiplicity, remaining / slot.value);
    for (std::size_t m = limit + 1; m-- > 0;) {
        for (std::size_t i = 0; i < m; ++i) chosen.push_back({slot.value, slot.color});
        enumerate_slots(layout, index + 1, remaining - m * slot.value, chosen, out);
        chosen.resize(chosen.size() - m);
    }
}

// Tallies of the ways the slots fill each total 0..limit.
std::vector<FamilyTally> tally_slots(const std::vector<Slot>& slots, std::size_t limit) {
    std::vector<FamilyTally> table(limit + 1);
    table[0][0] = 1;
    for (const Slot& slot : slots) {
        std::vector<FamilyTally> next = table;
        const unsigned toggle = statistic_bits(slot.value, slot.color);
        for (std::size_t m = 1; m <= slot.max_multiplicity && m * slot.value <= limit; ++m) {
            const unsigned t = m % 2 ? toggle : 0;
            for (std::size_t r = m * slot.value; r <= limit; ++r) {
                for (unsigned b = 0; b < 8; ++b) {
                    const BigInt& c = table[r - m * slot.value][b];
                    if (!c.is_zero()) next[r][b ^ t] += c;
                }
            }
        }
        table = std::move(next);
    }
    return table;
}

}  // namespace

std::vector<TwoColorPartition> enumerate_family(const FamilySpec& spec, std::size_t n) {
    std::vector<TwoColorPartition> all;
    std::vector<ColoredPart> chosen;
    if (!spec.anchor) {
        enumerate_slots(layout_for(spec, n, std::nullopt), 0, n, chosen, all);
    } else {
        for (std::size_t s : candidate_smallest(spec, n)) {
            const Layout layout = layout_for(spec, n, s);
            if (layout.forced_total > n) continue;
            enumerate_slots(layout, 0, n - layout.forced_total, chosen, all);
        }
    }
    std::vector<TwoColorPartition> out;
    for (auto& p : all) {
        unsigned bits = 0;
        for (const auto& part : p.parts()) {
            const unsigned t = statistic_bits(part.value, part.color);
            bits ^= t;
        }
        if (passes(spec.filter, bits)) out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigInt FamilyTally::total() const {
    BigInt sum = 0;
    for (const auto& c : counts_) sum += c;
    return sum;
}

BigInt FamilyTally::weighted(Weight w) const {
    unsigned mask = 0;
    switch (w) {
        case Weight::none: return total();
        case Weight::even_parts: mask = kEvenParts; break;
        case Weight::even_blue_parts: mask = kEvenBlueParts; break;
    }
    BigInt sum = 0;
    for (unsigned b = 0; b < 8; ++b) {
        if (b & mask) {
            sum -= counts_[b];
        } else {
            sum += counts_[b];
        }
    }
    return sum;
}

BigInt FamilyTally::filtered(const StatisticFilter& f) const {
    BigInt sum = 0;
    for (unsigned b = 0; b < 8; ++b) {
        if (passes(f, b)) sum += counts_[b];
    }
    return sum;
}

FamilyTally tally_family(const FamilySpec& spec, std::size_t n) {
    if (!spec.anchor) {
        return tally_slots(layout_for(spec, n, std::nullopt).slots, n)[n];
    }
    FamilyTally tally;
    for (std::size_t s : candidate_smallest(spec, n)) {
        const Layout layout = layout_for(spec, n, s);
        if (layout.forced_total > n) continue;
        unsigned forced_bits = 0;
        for (const auto& part : layout.forced) forced_bits ^= statistic_bits(part.value, part.color);
        const auto table = tally_slots(layout.slots, n - layout.forced_total);
        const FamilyTally& extras = table[n - layout.forced_total];
        for (unsigned b = 0; b < 8; ++b) tally[b ^ forced_bits] += extras[b];
    }
    return tally;
}

BigInt count_family(const FamilySpec& spec, std::size_t n, bool use_weight) {
    const FamilyTally tally = tally_family(spec, n);
    FamilyTally kept;
    for (unsigned b = 0; b < 8; ++b) {
        if (passes(spec.filter, b)) kept[b] = tally[b];
    }
    return use_weight ? kept.weighted(spec.weight) : kept.total();
}

BigInt count_overpartitions(std::size_t n, bool odd_only) {
    std::vector<BigInt> ways(n + 1);
    ways[0] = 1;
    for (std::size_t v = 1; v <= n; ++v) {
        if (odd_only && v % 2 == 0) continue;
        std::vector<BigInt> next = ways;
        // Using size v at least once: two choices for the first occurrence.
        for (std::size_t m = 1; m * v <= n; ++m) {
            for (std::size_t r = m * v; r <= n; ++r) next[r] += 2 * ways[r - m * v];
        }
        ways = std::move(next);
    }
    return ways[n];
}

BigInt count_ady(std::size_t n, bool distinct, bool allow_zero_part) {
    if (allow_zero_part && !distinct) {
        throw std::invalid_argument("count_ady: a zero part is only meaningful for distinct parts");
    }
    BigInt total = 0;
    for (std::size_t s = 1; s <= n; ++s) {
        std::vector<BigInt> ways(n - s + 1);
        ways[0] = 1;
        for (std::size_t v = s; v <= n; ++v) {
            const bool admissible = v % 2 == 0 || v < 2 * s;
            if (!admissible) continue;
            if (v == s && distinct) continue;
            std::vector<BigInt> next = ways;
            const std::size_t max = distinct ? 1 : n;
            for (std::size_t m = 1; m <= max && m * v <= n - s; ++m) {
                for (std::size_t r = m * v; r <= n - s; ++r) next[r] += ways[r - m * v];
            }
            ways = std::move(next);
        }
        total += ways[n - s];
    }
    if (allow_zero_part) {
        // Smallest part 0: every odd part would have to be negative, so only distinct even parts remain.
        std::vector<BigInt> ways(n + 1);
        ways[0] = 1;
        for (std::size_t v = 2; v <= n; v += 2) {
            for (std::size_t r = n; r >= v; --r) ways[r] += ways[r - v];
        }
        total += ways[n];
    }
    return total;
}

Series brute_force_series(const FamilySpec& spec, std::size_t order, bool use_weight, std::size_t budget) {
    if (order > budget) {
        throw SeriesError("enumeration order " + std::to_string(order) + " exceeds budget " + std::to_string(budget));
    }
    std::vector<BigInt> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) c[n] = count_family(spec, n, use_weight);
    return Series(std::move(c));
}

bool is_square(std::size_t n) {
    if (n < 2) return true;
    // Integer Newton iteration; no floating-point rounding on large n.
    std::size_t r = n;
    std::size_t y = (r + 1) / 2;
    while (y < r) {
        r = y;
        y = (r + n / r) / 2;
    }
    return r * r == n;
}

}  // namespace qplab
