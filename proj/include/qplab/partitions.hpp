#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qplab/series.hpp"

namespace qplab {

enum class Color { blue, green };
enum class Parity { odd, even };

struct ColoredPart {
    std::size_t value = 1;
    Color color = Color::blue;

    friend bool operator==(const ColoredPart&, const ColoredPart&) = default;
};

/// Canonical part order: larger value first, blue before green at equal value.
bool canonical_before(const ColoredPart& a, const ColoredPart& b);

/// A two-color partition, parts held in canonical order.
class TwoColorPartition {
public:
    TwoColorPartition() = default;
    explicit TwoColorPartition(std::vector<ColoredPart> parts);

    const std::vector<ColoredPart>& parts() const noexcept { return parts_; }
    std::size_t total() const;
    std::size_t count_even(std::optional<Color> color = std::nullopt) const;

    friend bool operator==(const TwoColorPartition&, const TwoColorPartition&) = default;
    /// Lexicographic over the canonical part listing.
    friend bool operator<(const TwoColorPartition& a, const TwoColorPartition& b);

private:
    std::vector<ColoredPart> parts_;
};

/// `3b+1g` style listing; the empty partition prints as an empty string.
std::string to_listing(const TwoColorPartition& p);
/// Inverse of to_listing; throws std::invalid_argument on malformed text.
TwoColorPartition parse_listing(std::string_view text);

/// Constraint on one (color, parity) cell of a family.
/// Parts of the cell must be >= s + min_offset, where s is the smallest part,
/// or >= 1 when the family has no smallest-part anchor.
struct CellRule {
    bool allowed = false;
    bool distinct = false;
    int min_offset = 0;
};

struct Anchor {
    enum class Colors { blue, both };
    enum class BlueMultiplicity { at_least_one, exactly_one_then_rule };

    Parity parity = Parity::odd;
    Colors colors = Colors::blue;
    BlueMultiplicity blue_multiplicity = BlueMultiplicity::at_least_one;
};

enum class Weight { none, even_parts, even_blue_parts };

struct StatisticFilter {
    std::optional<Parity> even_parts;
    std::optional<Parity> parts;
};

struct FamilySpec {
    std::string name;
    std::optional<Anchor> anchor;
    /// Indexed by cell_index(color, parity).
    std::array<CellRule, 4> cells{};
    Weight weight = Weight::none;
    StatisticFilter filter;

    static constexpr std::size_t cell_index(Color c, Parity p) {
        return (c == Color::blue ? 0 : 2) + (p == Parity::odd ? 0 : 1);
    }
    const CellRule& cell(Color c, Parity p) const { return cells[cell_index(c, p)]; }
    CellRule& cell(Color c, Parity p) { return cells[cell_index(c, p)]; }
};

/// Every partition of n admitted by `spec` (filters included), in canonical lexicographic order.
std::vector<TwoColorPartition> enumerate_family(const FamilySpec& spec, std::size_t n);

/// Counts of a family's partitions of n split by three parity statistics.
class FamilyTally {
public:
    static constexpr unsigned kEvenParts = 1;
    static constexpr unsigned kParts = 2;
    static constexpr unsigned kEvenBlueParts = 4;

    BigInt& operator[](unsigned bits) { return counts_[bits]; }
    const BigInt& operator[](unsigned bits) const { return counts_[bits]; }

    BigInt total() const;
    /// Sum of (-1)^statistic over the partitions.
    BigInt weighted(Weight w) const;
    /// Count restricted by the given parity statistics.
    BigInt filtered(const StatisticFilter& f) const;

private:
    std::array<BigInt, 8> counts_{};
};

FamilyTally tally_family(const FamilySpec& spec, std::size_t n);

/// Number of admitted partitions of n, or their signed total under the family weight.
BigInt count_family(const FamilySpec& spec, std::size_t n, bool use_weight);

/// Overpartitions of n (first occurrence of each size may be overlined); odd parts only if requested.
BigInt count_overpartitions(std::size_t n, bool odd_only);

/// Partitions of n whose odd parts are all < 2 * smallest part.
/// With allow_zero_part (distinct only) a single 0 may be adjoined as the smallest part.
BigInt count_ady(std::size_t n, bool distinct, bool allow_zero_part);

inline constexpr std::size_t kDefaultEnumerationBudget = 30;

/// sum_n count_family(spec, n, use_weight) q^n through `order`.
Series brute_force_series(const FamilySpec& spec, std::size_t order, bool use_weight,
                          std::size_t budget = kDefaultEnumerationBudget);

bool is_square(std::size_t n);

}  // namespace qplab
