#include "qplab/families.hpp"

#include <stdexcept>

namespace qplab {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::E: return "E";
        case Family::F: return "F";
        case Family::Tomega: return "Tomega";
        case Family::Tpsi: return "Tpsi";
        case Family::Tnu: return "Tnu";
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name) {
    for (Family f : kAllFamilies) {
        if (family_name(f) == name) return f;
    }
    return std::nullopt;
}

namespace {

constexpr CellRule kForbidden{};
constexpr CellRule repeated(int offset = 0) { return {true, false, offset}; }
constexpr CellRule distinct(int offset = 0) { return {true, true, offset}; }

FamilySpec make(std::string name, std::optional<Anchor> anchor, CellRule blue_odd, CellRule blue_even,
                CellRule green_odd, CellRule green_even, Weight weight) {
    FamilySpec spec;
    spec.name = std::move(name);
    spec.anchor = anchor;
    spec.cell(Color::blue, Parity::odd) = blue_odd;
    spec.cell(Color::blue, Parity::even) = blue_even;
    spec.cell(Color::green, Parity::odd) = green_odd;
    spec.cell(Color::green, Parity::even) = green_even;
    spec.weight = weight;
    return spec;
}

constexpr Anchor kOddBlue{Parity::odd, Anchor::Colors::blue, Anchor::BlueMultiplicity::at_least_one};
constexpr Anchor kOddBlueOnce{Parity::odd, Anchor::Colors::blue, Anchor::BlueMultiplicity::exactly_one_then_rule};
constexpr Anchor kOddBothColors{Parity::odd, Anchor::Colors::both, Anchor::BlueMultiplicity::at_least_one};

PochFactor num(int sign, Affine e, std::size_t power = 1) {
    return {.exponent = e, .sign = sign, .base = 2, .length = PochLength::infinite(),
            .position = FactorPosition::numerator, .power = power};
}

PochFactor den(int sign, Affine e, std::size_t power = 1) {
    return {.exponent = e, .sign = sign, .base = 2, .length = PochLength::infinite(),
            .position = FactorPosition::denominator, .power = power};
}

TermTemplate sum_template(Affine prefix, std::vector<PochFactor> factors) {
    TermTemplate t;
    t.prefix = prefix;
    t.factors = std::move(factors);
    return t;
}

TermTemplate product_template(std::vector<PochFactor> factors) {
    TermTemplate t;
    t.prefix = {0, 0};
    t.factors = std::move(factors);
    t.last_index = 0;
    return t;
}

}  // namespace

FamilySpec family_spec(Family f) {
    switch (f) {
        case Family::E:
            return make("E", std::nullopt, distinct(), distinct(), distinct(), kForbidden, Weight::even_parts);
        case Family::F:
            return make("F", std::nullopt, repeated(), repeated(), repeated(), kForbidden, Weight::even_parts);
        case Family::Tomega:
            return make("Tomega", kOddBlue, repeated(), distinct(1), repeated(), kForbidden, Weight::even_parts);
        case Family::Tpsi:
            return make("Tpsi", kOddBlue, distinct(), distinct(1), repeated(), kForbidden, Weight::even_parts);
        case Family::Tnu:
            return make("Tnu", kOddBlue, repeated(), distinct(1), kForbidden, distinct(1), Weight::even_blue_parts);
        case Family::A:
            return make("A", kOddBlue, repeated(), distinct(3), repeated(), distinct(1), Weight::even_parts);
        case Family::B:
            return make("B", kOddBlueOnce, repeated(2), distinct(4), repeated(), distinct(1), Weight::even_parts);
        case Family::C:
            return make("C", kOddBothColors, repeated(), distinct(5), repeated(), distinct(1), Weight::even_parts);
    }
    throw std::invalid_argument("unknown family");
}

FamilyInstanceGF family_templates(Family f) {
    // Sign -1 in a numerator factor counts parts freely; sign +1 weights each by -1.
    switch (f) {
        case Family::E:
            return {product_template({num(-1, {0, 2}), num(-1, {0, 1}, 2)}),
                    product_template({num(1, {0, 2}), num(-1, {0, 1}, 2)})};
        case Family::F:
            return {product_template({den(1, {0, 2}), den(1, {0, 1}, 2)}),
                    product_template({den(-1, {0, 2}), den(1, {0, 1}, 2)})};
        case Family::Tomega:
            return {sum_template({2, 1}, {num(-1, {2, 2}), den(1, {2, 1}, 2)}),
                    sum_template({2, 1}, {num(1, {2, 2}), den(1, {2, 1}, 2)})};
        case Family::Tpsi:
            return {sum_template({2, 1}, {num(-1, {2, 3}), num(-1, {2, 2}), den(1, {2, 1})}),
                    sum_template({2, 1}, {num(-1, {2, 3}), num(1, {2, 2}), den(1, {2, 1})})};
        case Family::Tnu:
            return {sum_template({2, 1}, {num(-1, {2, 2}, 2), den(1, {2, 1})}),
                    sum_template({2, 1}, {num(-1, {2, 2}), num(1, {2, 2}), den(1, {2, 1})})};
        case Family::A:
            return {sum_template({2, 1}, {num(-1, {2, 4}), num(-1, {2, 2}), den(1, {2, 1}, 2)}),
                    sum_template({2, 1}, {num(1, {2, 4}), num(1, {2, 2}), den(1, {2, 1}, 2)})};
        case Family::B:
            return {sum_template({2, 1}, {num(-1, {2, 6}), num(-1, {2, 2}), den(1, {2, 3}), den(1, {2, 1})}),
                    sum_template({2, 1}, {num(1, {2, 6}), num(1, {2, 2}), den(1, {2, 3}), den(1, {2, 1})})};
        case Family::C:
            return {sum_template({4, 2}, {num(-1, {2, 6}), num(-1, {2, 2}), den(1, {2, 1}, 2)}),
                    sum_template({4, 2}, {num(1, {2, 6}), num(1, {2, 2}), den(1, {2, 1}, 2)})};
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace qplab
